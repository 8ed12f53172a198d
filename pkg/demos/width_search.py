"""
Searching the move graph for thinner positions
==============================================
"""

from morsewidth import (
    Objective,
    ObjectiveKind,
    SearchConfig,
    beam_search,
    catalog,
    classify_positions,
    exhaustive_min,
    pad_with_fingers,
)

# Start from a deliberately fat presentation of the trefoil.
start = catalog("padded_trefoil")
objective = Objective(ObjectiveKind.GABAI_WIDTH)

result = beam_search(start, objective)
print("start width:", 18)
print("best width: ", result.best_report.width)
print("trace:      ", [str(m) for m in result.trace])
print("visited:    ", result.visited, "positions")

# Exhaustive search of a small ball certifies that the beam did not
# miss anything nearby.
certified = exhaustive_min(start, objective, radius=2)
print("exhaustive radius-2 minimum:", certified.best_report.width)

# Positions of one knot sort into cells by what they minimize:
# TP (width), MCP (critical count), OTP (thick-vector lex order).
fat = pad_with_fingers(catalog("trefoil_plat"), 2)
classes = classify_positions([catalog("trefoil_plat"), fat])
for pos in classes.positions:
    print(f"width {pos.report.width:3d}  cell {pos.cell}")

# Other objectives ride the same machinery.
fewest = beam_search(start, Objective(ObjectiveKind.CRITICAL_COUNT),
                     SearchConfig(max_steps=8))
print("fewest critical points:", fewest.best_report.critical_count)
