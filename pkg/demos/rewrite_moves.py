"""
Local rewrites of a Morse word
==============================

Moves rewrite a word without changing the knot: commuting distant
events, cancelling zig-zag fingers, Reidemeister 1/2 absorptions, and
the Yang-Baxter braid relation.  Each move has an inverse.
"""

from morsewidth import (
    apply_move,
    catalog,
    enumerate_moves,
    inverse_move,
    pad_with_fingers,
    width,
)

trefoil = catalog("trefoil_plat")

# Everything applicable at every site, in deterministic order.
moves = enumerate_moves(trefoil)
print(f"{len(moves)} moves available on {trefoil}")
for m in moves[:6]:
    print("  ", m)
print("   ...")

# Pad the trefoil with a removable finger: width jumps from 8 to 18.
padded = pad_with_fingers(trefoil, 1)
print("padded:", padded, " width", width(padded))

# The finger is a cup immediately under a cap; ZigZagCancel removes it.
cancel = next(m for m in enumerate_moves(padded) if m.kind.value == "ZigZagCancel")
slim = apply_move(padded, cancel)
print("after", cancel, ":", slim, " width", width(slim))

# Every move knows its inverse relative to the word it acted on.
back = apply_move(slim, inverse_move(padded, cancel))
print("undone:", back == padded)
