"""
Width, trunk, and the rest of the level-structure report
=========================================================

Every closed Morse word gets a report: gap profile, width, trunk,
height, bridge number, thick-level vector, and the derived ratios.
"""

from morsewidth import catalog, embedding_report, level_profile

# The trefoil in its 2-bridge plat: two cups, three crossings, two caps.
trefoil = catalog("trefoil_plat")
print("word:", trefoil)

report = embedding_report(trefoil)
print("width", report.width, "trunk", report.trunk,
      "height", report.height, "bridge", report.bridge)

# The profile behind those numbers.  A gap is the horizontal slice
# between two consecutive cups/caps; thick means cup below and cap
# above, thin the reverse.
for gap in level_profile(trefoil).gaps:
    print(f"  gap width {gap.width:2d}  {gap.classification}")

# Width is the sum of the gap widths, and it always equals
# (sum of thick squares - sum of thin squares) / 2.
prof = level_profile(trefoil)
square = sum(t * t for t in prof.thick_widths) - sum(s * s for s in prof.thin_widths)
print("sum of gaps:", report.width, " square identity:", square // 2)

# Two catalog words share width 242 but split it differently: one tall
# thick level versus two thinner ones over a thin waist.  Same width,
# different height, different trunk.
for name in ("cex4_gamma", "cex4_gamma_prime"):
    r = embedding_report(catalog(name))
    print(f"{name:18} width {r.width}  trunk {r.trunk}  height {r.height}"
          f"  otp {r.otp_vector}  proportion {r.proportion}")

# trunk never exceeds twice the bridge number; on a bridge position
# (no thin levels) it meets the bound exactly.
print("trunk bound met with equality:",
      report.trunk == 2 * report.bridge)
