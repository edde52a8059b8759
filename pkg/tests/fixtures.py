"""Shared diagram and program fixtures.

Each diagram is pinned to a frozen reference Alexander matrix: the arc
names, row/column orders and entries asserted in the tests reproduce those
matrices entry-for-entry, which calibrates the crossing-rule conventions.
"""

from tanglemva.diagram import parse_diagram

POSITIVE_CROSSING = parse_diagram("""
strand a open
strand b open
arc a1 on a role in
arc a2 on b role in
arc b1 on a role out
arc b2 on b role out
xing + over b1 under a2 -> b2
break a1 as b1
order in a1 a2
order out b1 b2
""")

NEGATIVE_CROSSING = parse_diagram("""
strand a open
strand b open
arc a1 on a role in
arc a2 on b role in
arc b1 on a role out
arc b2 on b role out
xing - over b1 under a2 -> b2
break a1 as b1
order in a1 a2
order out b1 b2
""")

TRIVIAL_STRAND = parse_diagram("""
strand a open
arc a1 on a role in
arc b1 on a role out
break a1 as b1
order in a1
order out b1
""")

# positive kink: the strand crosses over itself (R1 left side)
R1_KINK = parse_diagram("""
strand t1 open
arc a1 on t1 role in
arc b1 on t1 role out
xing + over a1 under a1 -> b1
order in a1
order out b1
""")

R1_FLAT = parse_diagram("""
strand t1 open
arc a1 on t1 role in
arc b1 on t1 role out
break a1 as b1
order in a1
order out b1
""")

# the 3-strand worked example without its closed component
EXAMPLE_T_PRIME = parse_diagram("""
strand t1 open
strand t2 open
strand t3 open
arc c on t1 role internal
arc d on t2 role internal
arc e on t3 role internal
arc f on t3 role internal
arc b1 on t1 role out
arc b2 on t2 role out
arc b3 on t3 role out
arc a1 on t1 role in
arc a2 on t2 role in
arc a3 on t3 role in
xing - over e under a1 -> c
xing + over c under a2 -> d
xing - over b3 under e -> f
xing + over f under c -> b1
xing + over f under d -> b2
xing + over c under f -> b3
break a3 as e
order in a1 a2 a3
order out b1 b2 b3
""")

# same tangle with the closed component (strand t4, single arc g) put back
EXAMPLE_T = parse_diagram("""
strand t1 open
strand t2 open
strand t3 open
strand t4 closed
arc c on t1 role internal
arc d on t2 role internal
arc e on t3 role internal
arc f on t3 role internal
arc g on t4 role internal
arc b1 on t1 role out
arc b2 on t2 role out
arc b3 on t3 role out
arc a1 on t1 role in
arc a2 on t2 role in
arc a3 on t3 role in
xing - over e under a1 -> c
xing + over c under a2 -> d
xing - over g under a3 -> e
xing - over b3 under e -> f
xing - over a3 under g -> g
xing + over f under c -> b1
xing + over f under d -> b2
xing + over c under f -> b3
order in a1 a2 a3
order out b1 b2 b3
""")

_TWO_STRAND_HEAD = """
strand t1 open
strand t2 open
arc c on t2 role internal
arc b1 on t1 role out
arc b2 on t2 role out
arc a1 on t1 role in
arc a2 on t2 role in
"""

_TWO_STRAND_TAIL = """
break a1 as b1
order in a1 a2
order out b1 b2
"""

R2_BRAID_LEFT = parse_diagram(_TWO_STRAND_HEAD + """
xing + over a1 under a2 -> c
xing - over b1 under c -> b2
""" + _TWO_STRAND_TAIL)

R2_CYCLIC_LEFT = parse_diagram(_TWO_STRAND_HEAD + """
xing - over b1 under a2 -> c
xing + over a1 under c -> b2
""" + _TWO_STRAND_TAIL)

R2_RIGHT = parse_diagram("""
strand t1 open
strand t2 open
arc b1 on t1 role out
arc b2 on t2 role out
arc a1 on t1 role in
arc a2 on t2 role in
break a1 as b1
break a2 as b2
order in a1 a2
order out b1 b2
""")

_THREE_STRAND_HEAD = """
strand t1 open
strand t2 open
strand t3 open
arc c on t2 role internal
arc b1 on t1 role out
arc b2 on t2 role out
arc b3 on t3 role out
arc a1 on t1 role in
arc a2 on t2 role in
arc a3 on t3 role in
"""

_THREE_STRAND_TAIL = """
break a3 as b3
order in a1 a2 a3
order out b1 b2 b3
"""

R3_BRAID_LEFT = parse_diagram(_THREE_STRAND_HEAD + """
xing - over a3 under a2 -> c
xing - over b3 under a1 -> b1
xing + over b1 under c -> b2
""" + _THREE_STRAND_TAIL)

R3_BRAID_RIGHT = parse_diagram(_THREE_STRAND_HEAD + """
xing + over a1 under a2 -> c
xing - over a3 under a1 -> b1
xing - over b3 under c -> b2
""" + _THREE_STRAND_TAIL)

R3_CYCLIC_LEFT = parse_diagram(_THREE_STRAND_HEAD + """
xing - over b1 under a2 -> c
xing - over b3 under a1 -> b1
xing + over a3 under c -> b2
""" + _THREE_STRAND_TAIL)

R3_CYCLIC_RIGHT = parse_diagram(_THREE_STRAND_HEAD + """
xing + over b3 under a2 -> c
xing - over a3 under a1 -> b1
xing - over a1 under c -> b2
""" + _THREE_STRAND_TAIL)

_OC_HEAD = """
strand t1 open
strand t2 open
strand t3 open
arc b1 on t1 role out
arc b2 on t2 role out
arc b3 on t3 role out
arc a1 on t1 role in
arc a2 on t2 role in
arc a3 on t3 role in
"""

_OC_TAIL = """
break a3 as b3
order in a1 a2 a3
order out b1 b2 b3
"""

OC_BRAID_LEFT = parse_diagram(_OC_HEAD + """
xing - over b3 under a1 -> b1
xing - over a3 under a2 -> b2
""" + _OC_TAIL)

OC_BRAID_RIGHT = parse_diagram(_OC_HEAD + """
xing - over a3 under a1 -> b1
xing - over b3 under a2 -> b2
""" + _OC_TAIL)

OC_CYCLIC_LEFT = parse_diagram(_OC_HEAD + """
xing - over b3 under a1 -> b1
xing + over a3 under a2 -> b2
""" + _OC_TAIL)

OC_CYCLIC_RIGHT = parse_diagram(_OC_HEAD + """
xing - over a3 under a1 -> b1
xing + over b3 under a2 -> b2
""" + _OC_TAIL)


# -- metamonoid programs ---------------------------------------------------------

from tanglemva import suites as _suites

# The 6-crossing program that assembles the worked 3-strand example: each
# crossing is a generator on scratch labels, each strand of the diagram is the
# chain of its crossing pieces glued in order along the strand.
T_PRIME_PROGRAM = """
gen rmva - p q
gen rmva + r s
union
gen rmva - u v
union
gen rmva + w x
union
gen rmva + y z
union
gen rmva + g h
union
mul p v -> p
mul p w -> p
mul p y -> p
mul p h -> p
mul p u -> t3
mul q r -> q
mul q g -> q
mul q x -> t1
mul s z -> t2
"""

MOVE_PROGRAM_PAIRS = _suites.MOVE_PROGRAM_PAIRS

MOVE_DIAGRAM_PAIRS = [
    ("R2 braid-like", R2_BRAID_LEFT, R2_RIGHT),
    ("R2 cyclic", R2_CYCLIC_LEFT, R2_RIGHT),
    ("R3 braid-like", R3_BRAID_LEFT, R3_BRAID_RIGHT),
    ("R3 cyclic", R3_CYCLIC_LEFT, R3_CYCLIC_RIGHT),
    ("OC braid-like", OC_BRAID_LEFT, OC_BRAID_RIGHT),
    ("OC cyclic", OC_CYCLIC_LEFT, OC_CYCLIC_RIGHT),
]
