"""
The text format, tangles, and profile pictures
==============================================

Words read bottom to top: b = cup, d = cap, x = crossing with a sign.
"""

from morsewidth import (
    catalog,
    parse,
    render_profile,
    serialize,
    tangle_trunk,
)

# Parse a figure-eight plat from text.  Comments and layout are free.
word = parse("""
    b1 b2 b3          # three bridges
    x4+ x5- x4+ x5-   # the alternating braid
    d3 d2 d1
""")
print("parsed:", serialize(word))
print("round trip ok:", parse(serialize(word)) == word)

# Tangles carry a boundary-strand header and end with arcs left open.
tangle = parse("tangle 4\nx1+ x2+ d2 d1")
print("tangle trunk:", tangle_trunk(tangle), "arcs:", tangle.arc_count)

# The classified gap profile as a quick terminal picture, top gap first.
stack = catalog("bt134")
print(render_profile(stack, fmt="ascii"))

# The same picture as a standalone SVG.
svg = render_profile(stack, fmt="svg")
with open("/tmp/bt134_profile.svg", "w", encoding="utf-8") as fh:
    fh.write(svg)
print("wrote /tmp/bt134_profile.svg,", svg.count("<rect"), "bars")
