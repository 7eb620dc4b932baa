"""
Forbidden configurations
========================

Small colored graphs that the construction can never contain. A class
pattern is a list of edge sets on labelled vertices a..e; it matches when
each set is monochromatic.
"""

from ramsey56 import EdgeColoring, build, default_patterns, match_pattern, soundness
from ramsey56.patterns import color_cycle, mono_odd_cycle

patterns = {p.name: p for p in default_patterns()}
striped = patterns["fig4b"]
print(striped.to_dict())

# ab=cd, ac=bd, ad=bc: a striped K4
k4 = EdgeColoring.from_edge_colors(4, [1, 2, 3, 3, 2, 1])
print("striped K4 found:", match_pattern(k4, striped))
print("rainbow K4:", match_pattern(EdgeColoring.rainbow(4), striped))

# the two structural detectors
triangle = EdgeColoring.monochromatic(3)
print("mono triangle:", mono_odd_cycle(triangle), color_cycle(triangle))

# none of the 50 detectors fire on random 5-subsets of the q=7 construction
report = soundness(build(7), samples=20_000, seed=0)
print("clean:", report.ok)
for line in report.lines()[:6]:
    print(" ", line)
