"""Assemble src/kummer/data/fibrations.json from the transcribed equations.

Every formula string must obey the catalog grammar; note the grammar binds
'^' tighter than unary minus, so negated powers are always parenthesized.
A regex audit enforces that discipline.
"""

import json
import re

F = {}

def fib(id, **kw):
    F[id] = kw

# ---------------------------------------------------------------- fibration 1
fib("1",
    name="D4^2 A1^6",
    rhs="(x+4*(a-1)*(b-1)*c*t*(t-a)*(t-b))*(x+4*(b-1)*(c-1)*a*t*(t-b)*(t-c))*(x+4*(c-1)*(a-1)*b*t*(t-c)*(t-a))",
    fibers=[["inf","D4"],["0","D4"],["a","A1"],["b","A1"],["c","A1"],["a*b","A1"],["b*c","A1"],["c*a","A1"]],
    zero="T2",
    sections={
        "T3": {"x": "-4*a*(b-1)*(c-1)*t*(t-b)*(t-c)", "y": "0"},
        "T4": {"x": "-4*b*(c-1)*(a-1)*t*(t-c)*(t-a)", "y": "0"},
        "T5": {"x": "-4*c*(a-1)*(b-1)*t*(t-a)*(t-b)", "y": "0"},
        "T12": {"x": "4*(t-a)*(t-b)*(t-c)*(t-a*b*c)",
                "y": "8*(t-a)*(t-b)*(t-c)*(t-a*b)*(t-a*c)*(t-b*c)"},
        "T13": {"x": "-4*(b-1)*(c-1)*t*(t-a)*(a*t-b*c)",
                "y": "-8*(b-1)*(c-1)*(b-a)*(c-a)*t^2*(t-a)*(t-b*c)"},
        "T14": {"x": "-4*(c-1)*(a-1)*t*(t-b)*(b*t-c*a)",
                "y": "-8*(c-1)*(a-1)*(c-b)*(a-b)*t^2*(t-b)*(t-c*a)"},
        "T15": {"x": "-4*(a-1)*(b-1)*t*(t-c)*(c*t-a*b)",
                "y": "-8*(a-1)*(b-1)*(a-c)*(b-c)*t^2*(t-c)*(t-a*b)"},
    },
    torsion_sections=["T3", "T4", "T5"], torsion=[2, 2],
    mw_basis=["T12"], mw_gram=[["1"]], mw_lattice="<1>",
    worked_heights={"T12": "1", "T13": "1", "T14": "1", "T15": "1"},
    height_breakdown={"T13": ["1", "1", "1/2", "1/2"]},
)

# ---------------------------------------------------------------- fibration 2
A2_ = ("4*(a-1)*b*c*(c-b)*t^2"
       "-4*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-b*c-a^2*b*c-a^2*c+2*a*c-a*b^2+2*a^2*b-a*b)*t"
       "+4*(b-1)*(c-a)*(a*c+b-2*a)")
B2_ = ("-16*(a-1)*a*b*(b-a)*(c-1)*c*(c-b)*t^3"
       "+16*a*(b-a)*(c-1)*(b^2*c^2+c^2+2*a*b*c^2-3*b*c^2-a*c^2-3*a*b^2*c+2*b^2*c-a^2*b*c+3*a*b*c-b*c+a^2*b^2-a*b^2)*t^2"
       "-16*a*(b-1)*(b-a)*(c-1)*(c-a)*(2*b*c+a*c-2*c-2*a*b+b)*t"
       "+16*a*(b-1)^2*(b-a)*(c-1)*(c-a)^2")
fib("2",
    name="D6 D4 A1^4",
    rhs=f"x*(x^2 + x*t*({A2_}) + t^2*({B2_}))",
    fibers=[["inf","D6"],["0","D4"],["1","A1"],["(c-a)/c","A1"],["(b-1)/b","A1"],
            ["(b-1)*(c-a)/((a-1)*(c-b))","A1"]],
    zero="T1",
    sections={
        "T4": {"x": "0", "y": "0"},
        "T13": {"x": "4*a*(b-a)*(c-1)*t^2",
                "y": "-8*a*(b-1)*(b-a)*(c-1)*(c-a)*t^2*(t-1)"},
        "T15": {"x": "-4*(b*t-b+1)*(c*t-c+a)*((a-1)*(c-b)*t-(b-1)*(c-a))",
                "y": "-8*(b-1)*(c-a)*(t-1)*(b*t-b+1)*(c*t-c+a)*((a-1)*(c-b)*t-(b-1)*(c-a))"},
    },
    torsion_sections=["T4"], torsion=[2],
    mw_basis=["T13"], mw_gram=[["1"]], mw_lattice="<1>",
    worked_heights={"T13": "1"},
    height_breakdown={"T13": ["6/4", "1", "1/2"]},
    edge={"source": "1", "param": "(x + 4*(a-1)*(b-1)*c*t^2*(t-a))/(t*(t-a))"},
)

# ---------------------------------------------------------------- fibration 3
fib("3",
    name="D6 A3 A1^6",
    rhs=("(x + 4*(a-1)*b*(c-b)*t*(t+4*(b-a)*(c-1)))"
         "*(x - 4*b*(b-a)*(c-1)*t*(t-4*(a-1)*(c-b)))"
         "*(x - (t-4*(a-1)*(c-b))*(t+4*(b-a)*(c-1))*(a*c*t+4*(a-1)*(b-a)*(c-1)*(c-b)))"),
    fibers=[["inf","D6"],["0","A3"],["4*(a-1)*(c-b)","A1"],["-4*(c-1)*(b-a)","A1"],
            ["-4*(a-1)*(c-1)*(b-a)/a","A1"],["-4*(a-1)*(b-a)*(c-b)/a","A1"],
            ["4*(a-1)*(c-1)*(c-b)/c","A1"],["-4*(c-1)*(b-a)*(c-b)/c","A1"]],
    zero="T1",
    sections={
        "T3": {"x": "4*b*(b-a)*(c-1)*t*(t-4*a*c+4*c+4*a*b-4*b)", "y": "0"},
        "T4": {"x": "(t-4*(a-1)*(c-b))*(t+4*(b-a)*(c-1))*(a*c*t+4*(a-1)*(b-a)*(c-1)*(c-b))",
               "y": "0"},
        "T5": {"x": "-4*(a-1)*b*(c-b)*t*(t+4*b*c-4*a*c-4*b+4*a)", "y": "0"},
    },
    torsion_sections=["T3", "T4", "T5"], torsion=[2, 2],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "1",
          "param": "-x/(a*c*t*(t-b)) - 4*(a-1)*(c-1)*(b*t-a*c)/(a*c)"},
)

# ---------------------------------------------------------------- fibration 4
fib("4",
    name="D4^3 A3",
    rhs=("x*(x^2 + 4*x*t*(t+c+a*b)*(t+a*c+b)*(t+b*c+a)"
         " + 16*a*b*c*(t+c+a*b)^2*(t+a*c+b)^2*(t+b*c+a)^2)"),
    fibers=[["-(c+a*b)","D4"],["-(b+a*c)","D4"],["-(a+b*c)","D4"],["inf","A3"]],
    zero="T0",
    sections={"T1": {"x": "0", "y": "0"}},
    torsion_sections=["T1"], torsion=[2],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "1",
          "param": ("-(c+a*b) + 4*(a-1)*(b-1)*(c-a)*(c-b)*t*(t-a*b)*(t-c)"
                    "/(x + 4*(a-1)*(b-1)*t*(t-c)*(c*t-a*b))")},
)

# ---------------------------------------------------------------- fibration 5
fib("5",
    name="A7 A3^2",
    rhs=("x*(x^2 + x*(16*(c-a*b)^2*t^4 + 64*(b-1)*(c-a)*(c+a*b)*t^3"
         " + 32*(2*a*b*c^2-4*b*c^2-a*c^2+3*c^2-4*a*b^2*c+2*b^2*c-a^2*b*c+6*a*b*c-b*c"
         "+2*a^2*c-4*a*c+3*a^2*b^2-a*b^2-4*a^2*b+2*a*b)*t^2"
         " - 64*(a-1)*(b-1)*(c-a)*(c-b)*t + 16*(a-1)^2*(c-b)^2)"
         " + 4096*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)*(t-1)^2*t^4)"),
    fibers=[["inf","A3"],["0","A7"],["1","A3"]],
    zero="N13",
    sections={
        "N2": {"x": "0", "y": "0"},
        "N12": {"x": "64*(b-1)*(b-a)*(c-1)*(c-a)*(t-1)^2",
                "y": ("256*(b-1)*(b-a)*(c-1)*(c-a)*(t-1)^2*((c+a*b)*t^2"
                      "+2*(b-1)*(c-a)*t-2*b*c+a*c+c+a*b+b-2*a)")},
        "N23": {"x": "64*b*(b-a)*(c-1)*c*t^2",
                "y": ("256*b*(b-a)*(c-1)*c*t^2*((c+a*b-2*a)*t^2"
                      "+2*(b-1)*(c-a)*t-(a-1)*(c-b))")},
    },
    torsion_sections=["N2"], torsion=[2],
    mw_basis=["N12", "N23"], mw_gram=[["2", "1"], ["1", "3/2"]], mw_lattice="P2[1/2]",
    edge={"source": "1",
          "param": ("(y - 8*(b-1)*(b-a)*(c-1)*(c-a)*t^2*(t-a)*(t-b*c))"
                    "/(2*(t-a*b)*(t-c)*(x + 4*(b-1)*(c-1)*t*(t-a)*(a*t-b*c)))"
                    " + (b-1)*(c-a)*t/((t-a*b)*(t-c))")},
)

# ---------------------------------------------------------------- fibration 6
fib("6",
    name="A7 A3 A1^2",
    rhs=("x*(x^2 + x*(16*(c-a*b)^2*t^4"
         " + 32*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c+2*a^2*c-a*c-a*b^2-a^2*b+2*a*b)*t^2"
         " + 16*(b-a)^2*(c-1)^2)"
         " - 4096*(a-1)*a*(b-1)*b*c*(c-a)*(c-b)*(t-1)*t^4*(t+1))"),
    fibers=[["inf","A3"],["0","A7"],["1","A1"],["-1","A1"]],
    zero="N15",
    sections={
        "N2": {"x": "0", "y": "0"},
        "N12": {"x": "-64*(a-1)*(b-1)*(c-a)*(c-b)*(t-1)*(t+1)",
                "y": ("-256*(a-1)*(b-1)*(c-a)*(c-b)*(t-1)*(t+1)*(c*t^2"
                      "+a*b*t^2+b*c+a*c-2*c-2*a*b+b+a)")},
        "N23": {"x": "-64*(a-1)*b*c*(c-b)*t^2",
                "y": "-256*(a-1)*b*c*(c-b)*t^2*((c+a*b-2*a)*t^2+(b-a)*(c-1))"},
        "N24": {"x": "-64*a*(b-1)*c*(c-a)*t^2",
                "y": "-256*a*(b-1)*c*(c-a)*t^2*((c+a*b-2*b)*t^2-(b-a)*(c-1))"},
    },
    torsion_sections=["N2"], torsion=[2],
    mw_basis=["N12", "N23", "N24"],
    mw_gram=[["2", "1", "1"], ["1", "3/2", "1/2"], ["1", "1/2", "3/2"]],
    mw_lattice="A3*[2]",
    edge={"source": "1",
          "param": "y/(2*(t-c)*(t-a*b)*(x + 4*(a-1)*(b-1)*c*t*(t-a)*(t-b)))"},
)

# ---------------------------------------------------------------- fibration 7
fib("7",
    name="A3^4",
    rhs=("x*(x^2 + x*((a^2+b^2+c^2-2*a*b-2*b*c-2*c*a-2*a-2*b-2*c+1)*t^4"
         " + 8*(a*b*c+a*b+b*c+c*a)*t^3"
         " - 2*((a+b+c+10)*a*b*c + (a+b)*(b+c)*(c+a) + a*b+b*c+c*a)*t^2"
         " + 8*a*b*c*(a+b+c+1)*t"
         " + (a-1)^2*b^2*c^2 + (b-1)^2*a^2*c^2 + (c-1)^2*a^2*b^2 - 2*a*b*c*(a*b*c+a+b+c))"
         " + 16*a*b*c*(t-1)^2*(t-a)^2*(t-b)^2*(t-c)^2)"),
    fibers=[["1","A3"],["a","A3"],["b","A3"],["c","A3"]],
    zero="T0",
    sections={
        "T1": {"x": "0", "y": "0"},
        "N34": {"x": "4*a*b*(t-1)*(t-a)*(t-b)*(t-c)",
                "y": ("4*a*b*(t-1)*(t-a)*(t-b)*(t-c)"
                      "*((c-b-a+1)*t^2-2*(c-a*b)*t-a*b*c+b*c+a*c-a*b)")},
        "N35": {"x": "4*a*c*(t-1)*(t-a)*(t-b)*(t-c)",
                "y": ("4*a*c*(t-1)*(t-a)*(t-b)*(t-c)"
                      "*((c-b+a-1)*t^2-2*(a*c-b)*t+a*b*c-b*c+a*c-a*b)")},
        "N45": {"x": "4*b*c*(t-1)*(t-a)*(t-b)*(t-c)",
                "y": ("4*b*c*(t-1)*(t-a)*(t-b)*(t-c)"
                      "*((c+b-a-1)*t^2-2*(b*c-a)*t+a*b*c+b*c-a*c-a*b)")},
    },
    torsion_sections=["T1"], torsion=[2],
    mw_basis=["N34", "N35", "N45"],
    mw_gram=[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    mw_lattice="<1>+<1>+<1>",
    edge={"source": "1",
          "param": ("2*(a-1)*(b-1)*(c-1)*t*(x-4*(t-a)*(t-b)*(t-c)*(t-a*b*c))"
                    "/(y + 2*(t^2-(a+b+c-1)*t+a*b*c)*x"
                    " + 8*(a-1)*(b-1)*(c-1)*t^2*(t-a)*(t-b)*(t-c)) - 1")},
)

# ---------------------------------------------------------------- fibration 8
fib("8",
    name="D6^2 A1^2",
    a2=("t*(2*(b-a)*(c-1)*t^2"
        " - (2*a*b*c^2-b*c^2-3*a^2*c^2+2*a*c^2-a*b^2*c+2*b^2*c+2*a^2*b*c-6*a*b*c+2*b*c"
        "+2*a^2*c-a*c+2*a*b^2-3*b^2-a^2*b+2*a*b)*t"
        " - 2*a*b*c*(a-1)*(c-b))"),
    a4=("t^2*(t-b)*(t-a*c)*((b-a)^2*(c-1)^2*t^2"
        " - (a-1)*(b-a)*(c-1)*(c-b)*(b*c-3*a*c+c+a*b-3*b+a)*t"
        " + a*b*c*(a-1)^2*(c-b)^2)"),
    a6="(a-1)^2*(b-a)^2*(c-1)^2*(c-b)^2*t^4*(t-b)^2*(t-a*c)^2",
    fibers=[["inf","D6"],["0","D6"],["b","A1"],["a*c","A1"]],
    zero="T3",
    sections={
        "T15": {"x": "0", "y": "(a-1)*(b-a)*(c-1)*(c-b)*t^2*(t-b)*(t-a*c)"},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["T15"], mw_gram=[["1"]], mw_lattice="<1>",
    edge={"source": "1",
          "param": ("-a*b*c*(x + 4*(a-1)*b*(c-1)*t*(t-a)*(t-c))"
                    "/(4*(b-a)*(c-1)*t^2*(t-a*b)*(t-c))")},
)

# ---------------------------------------------------------------- fibration 9
fib("9",
    name="D6 D5 A1^4",
    rhs=("x*(x^2 + 2*x*t*(-a*b*c*t^2"
         " - 2*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c+2*a^2*c-a*c-a*b^2-a^2*b+2*a*b)*t"
         " - 16*(a-1)*(b-1)*(c-a)*(c-b))"
         " + t^2*(a*t+4*(a-1)*(c-b))*(b*t+4*(b-1)*(c-a))"
         "*(a*c*t+4*(b-1)*(c-a))*(b*c*t+4*(a-1)*(c-b)))"),
    fibers=[["inf","D6"],["0","D5"],["-4*(a-1)*(c-b)/a","A1"],["-4*(b-1)*(c-a)/b","A1"],
            ["-4*(b-1)*(c-a)/(a*c)","A1"],["-4*(a-1)*(c-b)/(b*c)","A1"]],
    zero="T4",
    sections={"T3": {"x": "0", "y": "0"}},
    torsion_sections=["T3"], torsion=[2],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "1",
          "param": "(x + 4*(a-1)*(b-1)*t*(t-c)*(c*t-a*b))/(t^2*(t-c)*(t-a*b))"},
)

# ---------------------------------------------------------------- fibration 10
fib("10",
    name="A5^2 A1^2",
    rhs=("x*(x^2 + x*(b^2*t^4 - 8*(a-1)*b*(c-b)*t^3"
         " - 8*(4*a*b*c^2-2*b*c^2-2*a*c^2-2*a*b^2*c+b^2*c-2*a^2*b*c-3*a*b*c+4*b*c"
         "+4*a^2*c-2*a*c+4*a*b^2-3*b^2-2*a^2*b+a*b)*t^2"
         " + 32*(a-1)*(b-a)*(c-1)*(c-b)*t + 16*(b-a)^2*(c-1)^2)"
         " + 128*(a-1)*a*(b-1)*c*(c-a)*(c-b)*t^3*(t+2*c-2)*(b*t-2*b+2*a))"),
    fibers=[["inf","A5"],["0","A5"],["-2*(c-1)","A1"],["2*(b-a)/b","A1"]],
    zero="N14",
    sections={
        "T13": {"x": "0", "y": "0"},
        "N2": {"x": "16*(a-1)*a*c*(c-b)*t^2",
               "y": "16*(a-1)*a*c*(c-b)*t^2*(b*t^2+4*(b-a)*(c-1)*(t-1))"},
        "N5": {"x": "16*a*(b-1)*c*(c-a)*t^2",
               "y": "-16*a*(b-1)*c*(c-a)*t^2*(b*t^2+4*(b-a)*(c-1))"},
        "N34p": {"x": "16*(a-1)*(b-1)*c*(c-a)*t^2",
                 "y": "-16*(a-1)*(b-1)*c*(c-a)*t^2*(b*t^2+4*(c-b)*t-4*(b-a)*(c-1))"},
    },
    torsion_sections=["T13"], torsion=[2],
    mw_basis=["N2", "N5", "N34p"],
    mw_gram=[["4/3", "0", "2/3"], ["0", "4/3", "0"], ["2/3", "0", "4/3"]],
    mw_lattice="(A2+A1)[2/3]",
    edge={"source": "1",
          "param": ("(y - 8*(a-1)*(b-1)*(a-c)*(b-c)*t^2*(t-c)*(t-a*b))"
                    "/((x + 4*(a-1)*(b-1)*t*(t-c)*(c*t-a*b))*t*(t-b))"
                    " - 2*(a-1)*(c-b)/(t-b)")},
)

# ---------------------------------------------------------------- fibration 11
fib("11",
    name="D8 A1^6",
    rhs=("x*(x^2 + x*(4*(a-1)*(c-b)*t^3"
         " - 4*(2*a*b*c^2-b*c^2-3*a^2*c^2+2*a*c^2-a*b^2*c+2*b^2*c+2*a^2*b*c-3*a*b*c-b*c"
         "+2*a^2*c-a*c-a*b^2-a^2*b+2*a*b)*t^2"
         " + 4*(a*b^2*c^3-4*a^2*b*c^3+a*b*c^3+3*a^3*c^3-a^2*c^3+b^3*c^2+a^2*b^2*c^2"
         "-4*a*b^2*c^2-b^2*c^2-a^3*b*c^2+6*a^2*b*c^2+a*b*c^2-4*a^3*c^2+a^2*c^2-a*b^3*c"
         "+a^2*b^2*c+3*a*b^2*c+a^3*b*c-4*a^2*b*c-a*b*c+a^3*c-a^2*b^2+a^2*b)*t"
         " + 4*a*(b-a)*(c-1)*c*(a*b*c^2-a^2*c^2-b^2*c-a*b*c+b*c+a^2*c+a*b^2-a*b))"
         " + 16*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)*t*(t+a*c-b)"
         "*(t-b*c+a*c+a*b-a)*(t-b*c+a*c+c-a))"),
    fibers=[["inf","D8"],["0","A1"],["b*c-a*c-c+a","A1"],["(b-a)*c","A1"],
            ["b*c-a*c-a*b+a","A1"],["-a*(c-1)","A1"],["b-a*c","A1"]],
    zero="T5",
    sections={
        "T4": {"x": "0", "y": "0"},
        "T14": {"x": "4*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)",
                "y": ("-8*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)*(t+a*c-a)*(t-b*c+a*c)")},
    },
    torsion_sections=["T4"], torsion=[2],
    mw_basis=["T14"], mw_gram=[["1"]], mw_lattice="<1>",
    edge={"source": "1",
          "param": ("(x + 4*(a-1)*a*(b-1)*b*c*t)/(4*(a-1)*(c-b)*t^2)"
                    " + (b*(c-1)*t-a*c^2-b^2*c+b*c+a*c)/(c-b)")},
)

# ---------------------------------------------------------------- fibration 12
BIG12 = ("a*b^2*c^4-b^2*c^4-a^2*b*c^4+a*b*c^4+a^2*b^3*c^3-3*a*b^3*c^3+b^3*c^3-a^3*b^2*c^3"
         "+a^2*b^2*c^3+3*a*b^2*c^3+b^2*c^3+a^3*b*c^3-3*a^2*b*c^3-3*a*b*c^3+a^3*c^3+a^2*c^3"
         "-a^2*b^4*c^2+a*b^4*c^2+a^3*b^3*c^2+3*a^2*b^3*c^2+a*b^3*c^2-b^3*c^2-3*a^3*b^2*c^2"
         "-9*a^2*b^2*c^2-3*a*b^2*c^2+a^4*b*c^2+5*a^3*b*c^2+11*a^2*b*c^2+a*b*c^2-a^4*c^2"
         "-5*a^3*c^2-a^2*c^2+a^2*b^4*c-a*b^4*c-3*a^3*b^3*c-3*a^2*b^3*c+a*b^3*c+a^4*b^2*c"
         "+11*a^3*b^2*c+5*a^2*b^2*c+a*b^2*c-5*a^4*b*c-11*a^3*b*c-5*a^2*b*c+4*a^4*c+4*a^3*c"
         "+a^3*b^3+a^2*b^3-a^4*b^2-5*a^3*b^2-a^2*b^2+4*a^4*b+4*a^3*b-3*a^4")
C12 = ("(a-1)*b*(b-a)*(c-1)*c*(c-b)*t^2 - 4*a*(b-1)*(b-a)*(c-1)*(c-a)*t"
       " - 4*a*(b-1)*(c-a)*(a*c+b-2*a)")
fib("12",
    name="E6 D5",
    a2=("t*((a*b*c^2-2*b*c^2+a*c^2-2*a*b^2*c+b^2*c+a^2*b*c+3*a*b*c+b*c"
        "-2*a^2*c-2*a*c+a*b^2-2*a^2*b-2*a*b+3*a^2)*t - 4*a*(b-1)*(c-a))"),
    a4=("-(t^2)*((a-1)*(b-1)*b*(b-a)*(c-1)*c*(c-a)*(c-b)*t^3"
        f" + 2*({BIG12})*t^2"
        " + 4*a*(b-1)*(c-a)*(a*b*c^2-2*b*c^2+a*c^2-2*a*b^2*c+b^2*c+a^2*b*c+4*a*b*c+b*c"
        "-3*a^2*c-2*a*c+a*b^2-2*a^2*b-3*a*b+4*a^2)*t"
        " - 8*a^2*(b-1)^2*(c-a)^2)/2"),
    a6=f"t^4*({C12})^2/16",
    fibers=[["inf","E6"],["0","D5"]],
    zero="N4",
    sections={
        "N13": {"x": "(b-a)*(c-1)*(b*c-a)*t^2",
                "y": ("-(t^2)*((a-1)*b*(b-a)*(c-1)*c*(c-b)*t^2"
                      " - 4*(b-1)*b*(b-a)*(c-1)*c*(c-a)*t"
                      " + 4*a*(b-1)*(c-a)*(2*b*c-a*c-b))/4")},
        "N14pp": {"x": "0",
                  "y": ("t^2*((a-1)*b*(b-a)*(c-1)*c*(c-b)*t^2"
                        " - 4*a*(b-1)*(b-a)*(c-1)*(c-a)*t"
                        " - 4*a*(b-1)*(c-a)*(a*c+b-2*a))/4")},
        "N34pp": {"x": "-a*(b-1)*(a*c-a*b+b-a)*t^2",
                  "y": ("-(t^2)*((a-1)*b*(b-a)*(c-1)*c*(c-b)*t^2"
                        " + 4*(a-1)*a*(b-1)*b*(c-a)*(c-b)*t"
                        " + 4*a*(b-1)*(c-a)*(a*c-2*a*b+b))/4")},
        "N25pp": {"x": "-(c-a)*(a*c-c+b-a)*t^2",
                  "y": ("-(t^2)*((a-1)*b*(b-a)*(c-1)*c*(c-b)*t^2"
                        " + 4*(a-1)*(b-1)*c*(c-a)*(c-b)*t"
                        " + 4*a*(b-1)*(c-a)*(a*c-2*c+b))/4")},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["N13", "N14pp", "N34pp", "N25pp"],
    mw_gram=[["5/3", "1/3", "-1/3", "-1/3"],
             ["1/3", "5/3", "1/3", "1/3"],
             ["-1/3", "1/3", "5/3", "-1/3"],
             ["-1/3", "1/3", "-1/3", "5/3"]],
    mw_lattice="P4*[4]",
    edge={"source": "2",
          "param": ("(y + 2*(b-1)*(c-a)*(t-1)*x)"
                    "/((b-a)*(c-1)*(x + 4*(b*t-b+1)*(c*t-c+a)"
                    "*(a*c*t-c*t-a*b*t+b*t-b*c+c+a*b-a)))")},
)


# ---------------------------------------------------------------- fibration 13
fib("13",
    name="E6 D4",
    a2="0",
    a4="-108*t^4*(48*t^2+I4)",
    a6="108*t^4*(72*I2*t^4+(4*I4*I2-12*I6)*t^2+27*I10)",
    fibers=[["inf","D4"],["0","E6"]],
    zero="N24",
    sections={
        "N13": {"x": ("12*(a*b*c^2+b*c^2-2*a*c^2+a*b^2*c-2*b^2*c-2*a^2*b*c+b*c+a^2*c"
                      "+a*c+a*b^2+a^2*b-2*a*b)*t^2"),
                "y": "54*t^2*(4*(b*c-a*c-c-a*b+b+a)*t^2+I5)"},
        "N15": {"x": ("-12*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c-b^2*c-a^2*b*c+2*b*c+2*a^2*c"
                      "-a*c+2*a*b^2-a^2*b-a*b)*t^2"),
                "y": "-54*t^2*(4*(b*c+a*c-c-a*b-b+a)*t^2+I5)"},
        "N34ppp": {"x": ("12*(a*b*c^2+b*c^2-2*a*c^2-2*a*b^2*c+b^2*c+a^2*b*c-2*b*c"
                         "+a^2*c+a*c+a*b^2-2*a^2*b+a*b)*t^2"),
                   "y": "-54*t^2*(-4*(b*c-a*c-c+a*b-b+a)*t^2+I5)"},
        "N45ppp": {"x": ("12*(a*b*c^2-2*b*c^2+a*c^2-2*a*b^2*c+b^2*c+a^2*b*c+b*c"
                         "-2*a^2*c+a*c+a*b^2+a^2*b-2*a*b)*t^2"),
                   "y": "54*t^2*(4*(b*c-a*c+c+a*b-b-a)*t^2+I5)"},
        "N23ppp": {"x": ("-12*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c"
                         "-a^2*c+2*a*c-a*b^2+2*a^2*b-a*b)*t^2"),
                   "y": "54*t^2*(-4*(b*c+a*c-c-a*b+b-a)*t^2+I5)"},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["N13", "N15", "N34ppp", "N45ppp", "N23ppp"],
    mw_gram=[["5/3", "1/3", "1/3", "-1/3", "-1/3"],
             ["1/3", "5/3", "-1/3", "1/3", "1/3"],
             ["1/3", "-1/3", "5/3", "1/3", "1/3"],
             ["-1/3", "1/3", "1/3", "5/3", "-1/3"],
             ["-1/3", "1/3", "1/3", "-1/3", "5/3"]],
    mw_lattice="A5*[2]",
    uses_invariants=True,
    edge={"source": "3",
          "param": ("(a-1)*(b-a)*(c-1)*(c-b)*y/(t^2*(x"
                    " - (t-4*(a-1)*(c-b))*(t+4*(b-a)*(c-1))"
                    "*(a*c*t+4*(a-1)*(b-a)*(c-1)*(c-b))))")},
)

# ---------------------------------------------------------------- fibration 14
fib("14",
    name="A5^2",
    a2=("(a-1)^2*a^2*(c-b)^2*t^4 + 2*(2*a*b*c^2+2*b*c^2-4*a*c^2+2*a*b^2*c+2*b^2*c"
        "-4*a^2*b*c-6*a*b*c-4*b*c+5*a^2*c+5*a*c-4*a*b^2+5*a^2*b+5*a*b-6*a^2)*t^2 + 1"),
    a4=("-8*(b-1)*(b-a)*(c-1)*(c-a)*t^2*((a-1)^2*a^2*(c-b)^2*t^4"
        " - 2*(a*c^2+a^2*b*c+a*b*c+b*c-2*a^2*c-2*a*c+a*b^2-2*a^2*b-2*a*b+3*a^2)*t^2 + 1)"),
    a6=("16*(b-1)^2*(b-a)^2*(c-1)^2*(c-a)^2*t^4*((a-1)^2*a^2*(c-b)^2*t^4"
        " + 2*a*(a*c+c+a*b+b-2*a)*t^2 + 1)"),
    fibers=[["inf","A5"],["0","A5"]],
    zero="N14",
    sections={
        "N2": {"x": "-4*(b-1)*(c-a)*(a*c+b-a)*t^2",
               "y": "-4*(b-1)*b*c*(c-a)*t^2*(a^2*c*t^2-a*c*t^2-a^2*b*t^2+a*b*t^2-1)"},
        "N3": {"x": "-4*(b-a)*(c-1)*(c+a*b-a)*t^2",
               "y": "4*b*(b-a)*(c-1)*c*t^2*(a^2*c*t^2-a*c*t^2-a^2*b*t^2+a*b*t^2+1)"},
        "N24": {"x": "-4*(b-1)*(b-a)*(c-a)*t^2",
                "y": "-4*(b-1)*(b-a)*c*(c-a)*t^2*(a^2*c*t^2-a*c*t^2-a^2*b*t^2+a*b*t^2+1)"},
        "N34": {"x": "-4*a*(b-1)*(b-a)*(c-1)*t^2",
                "y": "4*(b-1)*(b-a)*(c-1)*c*t^2*(a^2*c*t^2-a*c*t^2-a^2*b*t^2+a*b*t^2-1)"},
        "T12": {"x": ("-4*(b-1)*(c-a)*t*(a^2*c*t^2-a*c*t^2-a^2*b*t^2+a*b*t^2+c*t+a*b*t"
                      "-2*a*t+1)"),
                "y": ("-4*(b-1)*(c-a)*t*((a-1)^2*a^2*(c-b)^2*t^4"
                      " - (a-1)*a*(c-b)*(b*c+a*c-3*c-3*a*b+b+3*a)*t^3"
                      " - 2*(a*c^2-c^2+a^2*b*c-3*a*b*c+b*c-2*a^2*c+3*a*c-a^2*b^2+a*b^2"
                      "+3*a^2*b-2*a*b-a^2)*t^2 - (b*c+a*c-3*c-3*a*b+b+3*a)*t + 1)")},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["N2", "N3", "N24", "N34", "T12"],
    mw_gram=[["4/3", "0", "0", "2/3", "0"],
             ["0", "4/3", "2/3", "0", "4/3"],
             ["0", "2/3", "4/3", "0", "2/3"],
             ["2/3", "0", "0", "4/3", "0"],
             ["0", "4/3", "2/3", "0", "7/3"]],
    mw_lattice="A2[2/3]+A2*[2]+<1>",
    edge={"source": "1",
          "param": ("y/(2*(a-1)*(c-b)*t^2*(t-a)*(x + 4*a*(b-1)*(c-1)*t*(t-b)*(t-c)))")},
)

# ---------------------------------------------------------------- fibration 15
fib("15",
    name="D8 D4 A3",
    a2=("t*(a*(b-a)*(c-1)*t^2 - (2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c"
        "-a^2*c+2*a*c-a*b^2+2*a^2*b-a*b)*t + b^2*c^2+2*a*b*c^2-3*b*c^2-a*c^2+c^2"
        "-3*a*b^2*c+2*b^2*c-a^2*b*c+3*a*b*c-b*c+a^2*b^2-a*b^2)"),
    a4=("(a-1)*(b-1)*b*c*(c-a)*(c-b)*(t-1)*t^2*(a*c*t+b*t-2*a*t-2*b*c-a*c+2*c"
        "+2*a*b-b)"),
    a6="(a-1)^2*(b-1)^2*b^2*c^2*(c-a)^2*(c-b)^2*(t-1)^2*t^3",
    fibers=[["inf","D8"],["0","D4"],["1","A3"]],
    zero="T0",
    sections={},
    torsion_sections=[], torsion=[],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "2", "param": "x/(4*a*(b-a)*(c-1)*t^2)"},
)

# ---------------------------------------------------------------- fibration 16
fib("16",
    name="E7 D4 A1^3",
    a2=("-4*t*((2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c-a^2*c+2*a*c"
        "-a*b^2+2*a^2*b-a*b)*t - (2*b*c+a*c-2*c-2*a*b+b))"),
    a4=("-16*t^2*(b*t-a*t-1)*(a*c*t-a*t-1)*((a-1)*(b-1)*b*c*(c-a)*(c-b)*t"
        " - (b^2*c^2+2*a*b*c^2-3*b*c^2-a*c^2+c^2-3*a*b^2*c+2*b^2*c-a^2*b*c+3*a*b*c"
        "-b*c+a^2*b^2-a*b^2))"),
    a6="64*(a-1)*(b-1)*b*c*(c-a)*(c-b)*t^3*(b*t-a*t-1)^2*(a*c*t-a*t-1)^2",
    fibers=[["inf","E7"],["0","D4"],["1/(b-a)","A1"],["1/(a*(c-1))","A1"],
            ["-1/((b-1)*(c-a))","A1"]],
    zero="T5",
    sections={
        "T13": {"x": "4*(b*t-a*t-1)*(a*c*t-a*t-1)",
                "y": "8*(b*t-a*t-1)*(a*c*t-a*t-1)*(b*c*t-c*t-a*b*t+a*t+1)"},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["T13"], mw_gram=[["1"]], mw_lattice="<1>",
    worked_heights={"T13": "1"},
    height_breakdown={"T13": ["3/2", "1/2", "1/2", "1/2"]},
    edge={"source": "2", "param": "-x/(4*a*(b-1)*(b-a)*(c-1)*(c-a)*t)"},
)

# ---------------------------------------------------------------- fibration 17
fib("17",
    name="D7 D4^2",
    a2=("-(t-1)*t*((a-1)*b*c*(c-b)*t + (b*c^2-a*c^2+a*b^2*c-a^2*b*c-3*a*b*c-b*c"
        "+2*a^2*c+2*a*c-a*b^2+2*a^2*b+2*a*b-3*a^2))"),
    a4="a*(b-1)*(c-1)*(b-a)*(c-a)*(b*c-a*c-c-a*b-b+3*a)*(t-1)^2*t^2",
    a6="a^2*(b-1)^2*(b-a)^2*(c-1)^2*(c-a)^2*(t-1)^3*t^3",
    fibers=[["inf","D7"],["0","D4"],["1","D4"]],
    zero="T4",
    sections={},
    torsion_sections=[], torsion=[],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "2",
          "param": ("-x/(4*(t-1)*(b*t-b+1)*(c*t-c+a)*((a-1)*(c-b)*t-(b-1)*(c-a)))"
                    " - 1/(t-1)")},
)

# ---------------------------------------------------------------- fibration 18
fib("18",
    name="E7 A3 A1^5",
    rhs=("x*(x^2 + x*(-4*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c-a^2*c"
         "+2*a*c-a*b^2+2*a^2*b-a*b)*t^2 + 8*(b*c+a*c-c-a*b+b-a)*t - 8)"
         " - 16*(b*t-a*t-1)*(a*c*t-a*t-1)*(a*c*t-c*t-a*b*t+b*t-1)"
         "*(b*c*t-a*b*t-1)*(b*c*t-c*t-1))"),
    fibers=[["inf","E7"],["0","A3"],["1/(b-a)","A1"],["1/(a*(c-1))","A1"],
            ["1/(c*(b-1))","A1"],["1/((a-1)*(c-b))","A1"],["1/(b*(c-a))","A1"]],
    zero="T5",
    sections={"T4": {"x": "0", "y": "0"}},
    torsion_sections=["T4"], torsion=[2],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    edge={"source": "2",
          "param": "-x/(4*a*(b-1)*(b-a)*(c-1)*(c-a)*t) + t/((b-1)*(c-a))"},
)

# ---------------------------------------------------------------- fibration 19
fib("19",
    name="D5^2",
    a2=("t*(-18*(a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2"
        " + 36*(3*b^2*c^2-2*a*b*c^2-2*b*c^2+a*c^2-2*a*b^2*c-2*b^2*c+a^2*b*c+3*a*b*c"
        "+b*c+a^2*c-2*a*c+a*b^2-2*a^2*b+a*b)*t - 72)"),
    a4=("-648*(b-a)*(c-1)*t^3*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*(2*b*c-c-a*b)*t^2"
        " - 2*(3*b^3*c^3-a*b^2*c^3-4*b^2*c^3+a*b*c^3+b*c^3-4*a*b^3*c^2-b^3*c^2"
        "+a^2*b^2*c^2+6*a*b^2*c^2+b^2*c^2+a^2*b*c^2-4*a*b*c^2-a^2*c^2+a*c^2+a^2*b^3*c"
        "+a*b^3*c-4*a^2*b^2*c+a*b^2*c-a^3*b*c+3*a^2*b*c-a*b*c+a^3*b^2-a^2*b^2)*t"
        " + 4*(2*b*c-c-a*b))"),
    a6=("2916*(b-a)^2*(c-1)^2*t^4*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2"
        " - 4*(b-1)*b*c*(c-a)*t + 4)^2"),
    fibers=[["inf","D5"],["0","D5"]],
    zero="N23p",
    sections={
        "N24": {"x": ("18*t*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2"
                      " - 2*(b^2*c^2-a*b*c^2-b*c^2-a*b^2*c+3*a*b*c+a^2*c-a*c-a^2*b)*t"
                      " + 4)"),
                "y": ("-54*(c-1)*t^2*((a-1)*a*(b-1)*b*(b+a)*c*(c-a)*(c-b)*t^2"
                      " + 4*a*b*(c^2+a*b*c-2*b*c-2*a*c+c+a*b)*t + 4*(b+a))")},
        "N25": {"x": ("18*((b-1)*c*(c-a)*t - 2)*((a-1)*a*b*(c-a)^2*(c-b)*t^2"
                      " - 2*(c-a)*(b*c-2*a*b+a)*t - 4)/(c-a)^2"),
                "y": ("-54*((a-1)*a*(b-1)*b*c*(c-a)^4*(c-b)*(b*c-a*c+2*a*b-b-a)*t^4"
                      " - 4*a*(b-1)*(c-a)^3*(2*a*b*c^2-b*c^2-a*c^2-3*a*b^2*c+2*b^2*c"
                      "+a^2*b*c+a*b*c-b*c-a^2*b^2+a*b^2)*t^3"
                      " + 4*(c-a)^2*(2*a*b*c^2-b*c^2-a*c^2-4*a*b^2*c+2*b^2*c+2*a^2*b*c"
                      "+5*a*b*c-b*c-a^2*c-3*a*c-6*a^2*b^2+2*a*b^2+6*a^2*b-a*b-a^2)*t^2"
                      " - 16*(c-a)*(c-3*a*b+2*a)*t - 32)/(c-a)^3")},
        "T3": {"x": "-36*(b-a)*(c-1)*(b*c-a)*t^2",
               "y": ("54*(b-a)*(c-1)*t^2*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2"
                     " - 4*a*(b-1)*(c-a)*t + 4)")},
        "T14": {"x": "0",
                "y": ("-54*(b-a)*(c-1)*t^2*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2"
                      " - 4*(b-1)*b*c*(c-a)*t + 4)")},
        "N45p": {"x": "18*t*((a-1)*a*(c-b)*t - 2)*((b-1)*b*c*(c-a)*t - 2)",
                 "y": ("-54*(b-a)*(c-1)*t^2*((a-1)*a*(b-1)*b*c*(c-a)*(c-b)*t^2 - 4)")},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["N24", "N25", "T3", "T14", "N45p"],
    mw_gram=[["2", "1", "1", "1", "0"],
             ["1", "3", "3/2", "1/2", "1"],
             ["1", "3/2", "3/2", "1/2", "0"],
             ["1", "1/2", "1/2", "3/2", "0"],
             ["0", "1", "0", "0", "2"]],
    mw_lattice="A3*[2]+P2[1/2]",
    edge={"source": "1",
          "param": ("(y + 8*(t-a)*(t-b)*(t-c)*(t-a*b)*(t-b*c)*(t-a*c))"
                    "/((a-1)*(b-1)*(c-a)*(c-b)*t^2*(x - 4*(t-a)*(t-b)*(t-c)*(t-a*b*c)))"
                    " + 2*(t-a*b)*(t-c)/((a-1)*(b-1)*(c-a)*(c-b)*t^2)")},
)

# ---------------------------------------------------------------- fibration 20
LONG20 = ("a*b^2*c^4-b^2*c^4-a^2*b*c^4+a*b*c^4+a^2*b^3*c^3-3*a*b^3*c^3+b^3*c^3"
          "-a^3*b^2*c^3+3*a^2*b^2*c^3-a*b^2*c^3+b^2*c^3-a^3*b*c^3+3*a^2*b*c^3"
          "-3*a*b*c^3-a^3*c^3+a^2*c^3-a^2*b^4*c^2+a*b^4*c^2+a^3*b^3*c^2-a^2*b^3*c^2"
          "+3*a*b^3*c^2-b^3*c^2+3*a^3*b^2*c^2-10*a^2*b^2*c^2+3*a*b^2*c^2-a^4*b*c^2"
          "+3*a^3*b*c^2-a^2*b*c^2+a*b*c^2+a^3*c^2-a^2*c^2+a^2*b^4*c-a*b^4*c"
          "-3*a^3*b^3*c+3*a^2*b^3*c-a*b^3*c+a^4*b^2*c-a^3*b^2*c+3*a^2*b^2*c-a*b^2*c"
          "+a^4*b*c-3*a^3*b*c+a^2*b*c+a^3*b^3-a^2*b^3-a^4*b^2+a^3*b^2")
Q20 = ("(t - 4*a*(b-a)*(c-1))*(t + 4*(a-1)*a*b*(c-b))*(t + 4*(a-1)*c*(c-b))"
       "*(t - 4*b*(b-a)*(c-1)*c)")
fib("20",
    name="D10 A1^4",
    a2=("-2*(t^3 - 2*(3*b^2*c^2-2*a*b*c^2-2*b*c^2-2*a*c^2+3*c^2-2*a*b^2*c-2*b^2*c"
        "-2*a^2*b*c+12*a*b*c-2*b*c-2*a^2*c-2*a*c+3*a^2*b^2-2*a*b^2-2*a^2*b-2*a*b"
        f"+3*a^2)*t^2 - 16*({LONG20})*t"
        " - 32*(a-1)*a*b*(b-a)*(c-1)*c*(c-b)*(a*b*c^2+b^2*c+a^2*b*c+b*c+a^2*c"
        "-2*a*c+a*b^2-2*a^2*b+a*b-2*b*c^2+a*c^2-2*a*b^2*c))"),
    a4=(f"{Q20}*(t^2 - 4*t*(3*b^2*c^2-a*b*c^2-4*b*c^2-a*c^2+3*c^2-4*a*b^2*c-b^2*c"
        "-a^2*b*c+12*a*b*c-b*c-a^2*c-4*a*c+3*a^2*b^2-a*b^2-4*a^2*b-a*b+3*a^2)"
        " - 16*(b*c^2-a*c^2+a*b^2*c-b^2*c-a^2*b*c+a*c+a^2*b-a*b)"
        "*(a*b*c^2-b*c^2-a*b^2*c+b*c+a^2*c-a*c+a*b^2-a^2*b))"),
    a6=("4*(b-1)^2*(c-a)^2*(t - 4*a*(b-a)*(c-1))^2*(t + 4*(a-1)*a*b*(c-b))^2"
        "*(t + 4*(a-1)*c*(c-b))^2*(t - 4*b*(b-a)*(c-1)*c)^2"),
    fibers=[["inf","D10"],["-4*a*b*(a-1)*(c-b)","A1"],["4*b*c*(b-a)*(c-1)","A1"],
            ["4*a*(b-a)*(c-1)","A1"],["-4*c*(a-1)*(c-b)","A1"]],
    zero="T4",
    sections={
        "T13": {"x": "0",
                "y": f"-2*(b-1)*(c-a)*{Q20}"},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["T13"], mw_gram=[["1"]], mw_lattice="<1>",
    edge={"source": "2", "param": "x/t^2 + 4*(a-1)*b*c*(c-b)*t"},
)

# ---------------------------------------------------------------- fibration 21
LONG21 = ("b^2*c^4-2*a*b*c^4+a^2*c^4-2*a*b^3*c^3+4*a^2*b^2*c^3+2*a*b^2*c^3-2*b^2*c^3"
          "-2*a^3*b*c^3-2*a^2*b*c^3+2*a*b*c^3+a^2*b^4*c^2-2*a^3*b^3*c^2+2*a^2*b^3*c^2"
          "+4*a*b^3*c^2+a^4*b^2*c^2-2*a^3*b^2*c^2-15*a^2*b^2*c^2-2*a*b^2*c^2+b^2*c^2"
          "+12*a^3*b*c^2+6*a^2*b*c^2-6*a^3*c^2-2*a^2*b^4*c+2*a^3*b^3*c-2*a^2*b^3*c"
          "-2*a*b^3*c+6*a^3*b^2*c+12*a^2*b^2*c-6*a^4*b*c-10*a^3*b*c-6*a^2*b*c+4*a^4*c"
          "+4*a^3*c+a^2*b^4-6*a^3*b^2+4*a^4*b+4*a^3*b-3*a^4")
fib("21",
    name="A9 A1^3",
    a2=("t^4 + 2*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-3*a*b*c-b*c+2*a^2*c"
        "+2*a*c-a*b^2+2*a^2*b+2*a*b-3*a^2)*t^2 + 8*a*(b-1)*(b-a)*(c-1)*(c-a)*t"
        f" + ({LONG21})"),
    a4=("16*a*b*c*(a-1)*(b-1)*(c-1)*(b-a)*(c-a)*(c-b)*(t+a*b-a)*(t+c-a)"
        "*(t-b*c+a*c+b-a)"),
    a6="0",
    fibers=[["inf","A9"],["a-c","A1"],["-a*(b-1)","A1"],["(b-a)*(c-1)","A1"]],
    zero="N24p",
    sections={
        "V21": {"x": "0", "y": "0"},
        "N4": {"x": "4*(a-1)*(b-1)*b*(b-a)*c*(c-a)*(c-b)",
               "y": ("-4*(a-1)*(b-1)*b*(b-a)*c*(c-a)*(c-b)*(t^2 + 2*a*(c-1)*t"
                     " - (b*c^2-a*c^2+a*b^2*c-2*b^2*c-a^2*b*c-a*b*c+b*c+2*a^2*c"
                     "+a*b^2-a^2))")},
        "N14": {"x": "-4*a*(b-1)*(c-1)*(c-a)*(t+b-a)^2",
                "y": ("-4*a*(b-1)*(c-1)*(c-a)*(t+b-a)*(t^3 + (b-a)*t^2"
                      " - (b*c^2-a*c^2+a*b^2*c-2*b^2*c-a^2*b*c+a*b*c+b*c+a*b^2"
                      "-2*a*b+a^2)*t - (b-a)*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c-a^2*b*c"
                      "+a*b*c+b*c+a*b^2-2*a*b+a^2))")},
        "N23": {"x": "4*(a-1)*a*(b-1)*b*(c-1)*c*(c-a)*(c-b)",
                "y": ("4*(a-1)*a*(b-1)*b*(c-1)*c*(c-a)*(c-b)*(t^2 + 2*(b-a)*t"
                      " + 2*a*b*c^2-b*c^2-a*c^2-a*b^2*c-a^2*b*c+a*b*c+b*c+a*b^2"
                      "-2*a*b+a^2)")},
    },
    torsion_sections=["V21"], torsion=[2],
    mw_basis=["N4", "N14", "N23"],
    mw_gram=[["8/5", "6/5", "2/5"], ["6/5", "12/5", "4/5"], ["2/5", "4/5", "8/5"]],
    mw_lattice="P3*[4]",
    edge={"source": "2",
          "param": ("(y - 8*a*(b-1)*(c-1)*(b-a)*(c-a)*t^2*(t-1))"
                    "/(2*t*(x - 4*a*(b-a)*(c-1)*t^2))")},
)

# ---------------------------------------------------------------- fibration 22
LONG22 = ("b^2*c^4-2*a*b*c^4+a^2*c^4-2*a*b^3*c^3+4*a*b^2*c^3-2*b^2*c^3+2*a^3*b*c^3"
          "-2*a^2*b*c^3+2*a*b*c^3-2*a^3*c^3+a^2*b^4*c^2-2*a^3*b^3*c^2+4*a^2*b^3*c^2"
          "+a^4*b^2*c^2-2*a^3*b^2*c^2-4*a^2*b^2*c^2-2*a*b^2*c^2+b^2*c^2-2*a^4*b*c^2"
          "+4*a^3*b*c^2+a^4*c^2-2*a^2*b^4*c+2*a^3*b^3*c-2*a^2*b^3*c+2*a*b^3*c"
          "+4*a^2*b^2*c-2*a*b^2*c-2*a^3*b*c+a^2*b^4-2*a^2*b^3+a^2*b^2")
fib("22",
    name="A9 A1",
    a2=("t^4 + 8*(2*a*b*c^2-b*c^2-a*c^2-a*b^2*c+2*b^2*c-a^2*b*c-b*c-a^2*c+2*a*c"
        f"-a*b^2+2*a^2*b-a*b)*t^2 + 16*({LONG22})"),
    a4=("-1024*(a-1)*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)*(c-b)"
        "*(b*c+a*c-c-a*b+b-a)*t^2"),
    a6=("65536*(a-1)^2*a^2*(b-1)^2*b^2*(b-a)^2*(c-1)^2*c^2*(c-a)^2*(c-b)^2*t^2"),
    fibers=[["inf","A9"],["0","A1"]],
    zero="N24p",
    sections={
        "N3": {"x": "64*(a-1)*(b-1)*b*(b-a)*c*(c-a)*(c-b)",
               "y": ("-64*(a-1)*(b-1)*b*(b-a)*c*(c-a)*(c-b)*(t^2"
                     " - 4*(b*c^2-a*c^2+a*b^2*c-2*b^2*c-a^2*b*c+b*c+a^2*c+a*b^2-a*b))")},
        "N13": {"x": "-16*(a-1)*a*(c-1)*(c-b)*(t-2*b*c+2*a*c)*(t+2*b*c-2*a*c)",
                "y": ("-16*(a-1)*a*(c-1)*(c-b)*(t^4 - 4*t^2*(b^2*c^2-4*a*b*c^2+b*c^2"
                      "+3*a^2*c^2-a*c^2+a*b^2*c-2*b^2*c-a^2*b*c+2*a*b*c+b*c-a^2*c"
                      "+a*b^2-a*b) - 16*(b-a)^2*c^2*(2*a*b*c^2-b*c^2-2*a^2*c^2+a*c^2"
                      "-a*b^2*c+a^2*b*c-2*a*b*c+b*c+a^2*c+a*b^2-a*b))")},
        "N23": {"x": "64*(a-1)*a*(b-1)*b*(c-1)*c*(c-a)*(c-b)",
                "y": ("64*(a-1)*a*(b-1)*b*(c-1)*c*(c-a)*(c-b)*(t^2 + 4*(2*a*b*c^2"
                      "-b*c^2-a*c^2-a*b^2*c-a^2*b*c+b*c+a^2*c+a*b^2-a*b))")},
        "N34": {"x": "-16*(b-1)*(b-a)*c*(t-2*a*c+2*a*b)*(t+2*a*c-2*a*b)",
                "y": ("16*(b-1)*(b-a)*c*(t^4 + 4*t^2*(2*a*b*c^2-b*c^2-a^2*c^2-a*c^2"
                      "-a*b^2*c+a^2*b*c+2*a*b*c+b*c-a^2*c-a^2*b^2-a*b^2+2*a^2*b-a*b)"
                      " - 16*a^2*(c-b)^2*(b*c^2-a*c^2-a*b^2*c+a^2*b*c+2*a*b*c-b*c"
                      "-a^2*c-a*b^2+a*b))")},
        "Q": {"x": "0",
              "y": "256*a*b*c*(a-1)*(b-1)*(c-1)*(b-a)*(c-a)*(c-b)*t"},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["N3", "N13", "N23", "N34", "Q"],
    mw_gram=[["8/5", "6/5", "2/5", "4/5", "2/5"],
             ["6/5", "12/5", "4/5", "8/5", "4/5"],
             ["2/5", "4/5", "8/5", "6/5", "8/5"],
             ["4/5", "8/5", "6/5", "12/5", "6/5"],
             ["2/5", "4/5", "8/5", "6/5", "13/5"]],
    mw_lattice="(A4*+A1*)[2]",
    edge={"source": "2", "param": "y/(t*x)"},
)

# ---------------------------------------------------------------- fibration 23
T23CUBE = "(t^3 - I4*t/12 + (I2*I4-3*I6)/108)"
fib("23",
    name="D9 A1^6",
    a2=f"-2*{T23CUBE}",
    a4=f"{T23CUBE}^2 + I10*(t - I2/24)",
    a6="0",
    fibers=[["inf","D9"],
            ["(a*b*c^2-2*b*c^2+a*c^2+a*b^2*c+b^2*c-2*a^2*b*c+b*c+a^2*c-2*a*c-2*a*b^2+a^2*b+a*b)/3","A1"],
            ["(-2*a*b*c^2+b*c^2+a*c^2+a*b^2*c-2*b^2*c+a^2*b*c+b*c+a^2*c-2*a*c+a*b^2-2*a^2*b+a*b)/3","A1"],
            ["(-2*a*b*c^2+b*c^2+a*c^2+a*b^2*c+b^2*c+a^2*b*c-2*b*c-2*a^2*c+a*c-2*a*b^2+a^2*b+a*b)/3","A1"],
            ["(a*b*c^2+b*c^2-2*a*c^2-2*a*b^2*c+b^2*c+a^2*b*c-2*b*c+a^2*c+a*c+a*b^2-2*a^2*b+a*b)/3","A1"],
            ["(a*b*c^2+b*c^2-2*a*c^2+a*b^2*c-2*b^2*c-2*a^2*b*c+b*c+a^2*c+a*c+a*b^2+a^2*b-2*a*b)/3","A1"],
            ["(a*b*c^2-2*b*c^2+a*c^2-2*a*b^2*c+b^2*c+a^2*b*c+b*c-2*a^2*c+a*c+a*b^2+a^2*b-2*a*b)/3","A1"]],
    zero="T3",
    sections={"T5": {"x": "0", "y": "0"}},
    torsion_sections=["T5"], torsion=[2],
    mw_basis=[], mw_gram=[], mw_lattice="0",
    uses_invariants=True,
    edge={"source": "3",
          "param": ("x/(4*t^2) - a*c*t/4 + 4*(a-1)*b*(b-a)*(c-1)*(c-b)/t"
                    " - (2*a*b*c^2-b*c^2-3*a^2*c^2+2*a*c^2-a*b^2*c+2*b^2*c+2*a^2*b*c"
                    "-6*a*b*c+2*b*c+2*a^2*c-a*c+2*a*b^2-3*b^2-a^2*b+2*a*b)/3")},
)

# ---------------------------------------------------------------- fibration 24
fib("24",
    name="E8 A1^6",
    a2="-48*I4",
    a4="-12*(3*t^2-2*I2)*(3*t^2*I4 + 432*t*I5 - 48*I6 + 14*I2*I4)",
    a6=("16*(729*I5*t^7 - 27*(3*I6-I2*I4)*t^6 - 1458*I2*I5*t^5"
        " + 54*(3*I2*I6+6*I4^2-I2^2*I4)*t^4 + 972*(32*I4+I2^2)*I5*t^3"
        " - 36*(96*I4*I6+3*I2^2*I6-20736*I5^2-20*I2*I4^2-I2^3*I4)*t^2"
        " - 216*I5*(768*I6-160*I2*I4+I2^3)*t"
        " + 8*(1152*I6^2-480*I2*I4*I6+3*I2^3*I6+50*I2^2*I4^2-I2^4*I4))"),
    fibers=[["inf","E8"],
            ["-2*(b*c-a*c-c-a*b+b+a)","A1"],["-2*(b*c+a*c-c-a*b-b+a)","A1"],
            ["2*(b*c-a*c-c+a*b-b+a)","A1"],["2*(b*c-a*c+c-a*b-b+a)","A1"],
            ["2*(b*c+a*c-c-a*b+b-a)","A1"],["-2*(b*c-a*c+c+a*b-b-a)","A1"]],
    zero="T4",
    sections={
        "T14": {"x": "(3*t^2-2*I2)^2/4",
                "y": ("-(27*t^6-54*I2*t^4+(-576*I4+36*I2^2)*t^2-27648*I5*t"
                      "+3072*I6-640*I2*I4-8*I2^3)/8")},
    },
    torsion_sections=[], torsion=[],
    mw_basis=["T14"], mw_gram=[["1"]], mw_lattice="<1>",
    worked_heights={"T14": "1"},
    height_breakdown={"T14": ["1/2", "1/2", "1/2", "1/2", "1/2", "1/2"]},
    uses_invariants=True,
    abc_form={
        "a2": "-48*alpha*gamma",
        "a4": "-12*gamma*(3*t^2-2*gamma)*(3*alpha*t^2+432*gamma*t+(-48*beta+14*alpha)*gamma)",
        "a6": ("16*(729*gamma^2*t^7 - 27*(3*beta-alpha)*gamma^2*t^6 - 1458*gamma^3*t^5"
               " + 54*gamma^2*(3*beta*gamma-alpha*gamma+6*alpha^2)*t^4"
               " + 972*gamma^3*(gamma+32*alpha)*t^3"
               " - 36*gamma^3*(3*beta*gamma-alpha*gamma-20736*gamma+96*alpha*beta-20*alpha^2)*t^2"
               " - 216*gamma^4*(gamma+768*beta-160*alpha)*t"
               " + 8*gamma^4*(3*beta*gamma-alpha*gamma+1152*beta^2-480*alpha*beta+50*alpha^2))"),
    },
    edge={"source": "11",
          "param": ("(a-1)*(c-b)*x/(a*b*c*(b-1)*(c-1)*(b-a)*(c-a)) + 4*t"
                    " - 2*(b*c-a*c-c-a*b+b+a)")},
)

# ---------------------------------------------------------------- fibration 25
K25 = "(a-1)*a*(b-1)*b*(b-a)*(c-1)*c*(c-a)*(c-b)"
fib("25",
    name="D9",
    a2="-6*(t^3 - 3*I4*t + (6*I6-2*I2*I4))",
    a4="69984*I10*(8*t-I2)",
    a6=("419904*I10*(t^4 + I2*t^3 + 6*I4*t^2 + (-48*I6+13*I2*I4)*t"
        " + 6*I2*I6 + 9*I4^2 - 2*I2^2*I4)"),
    fibers=[["inf","D9"]],
    zero="N35_11",
    sections={},
    x_sections={
        "Q1": f"-648*{K25}*(b*c+a*c-c-a*b-b+a)",
        "Q2": f"-648*{K25}*(b*c-a*c+c+a*b-b-a)",
        "Q3": f"-648*{K25}*(b*c-a*c-c-a*b+b+a)",
        "Q4": f"648*{K25}*(b*c+a*c-c-a*b+b-a)",
        "Q5": f"648*{K25}*(b*c-a*c+c-a*b-b+a)",
        "Q6": f"648*{K25}*(b*c-a*c-c+a*b-b+a)",
    },
    p_relations={"P1": {"Q3": 1, "Q4": -1}, "P2": {"Q5": 1, "Q6": -1},
                 "P3": {"Q3": 1, "Q6": -1}, "P4": {"Q2": 1, "Q3": 1},
                 "P5": {"Q3": 1}, "P6": {"Q1": 1, "Q6": -1}},
    torsion_sections=[], torsion=[],
    mw_basis=["P1", "P2", "P3", "P4", "P5", "P6"],
    mw_gram=[["3", "1", "2", "1", "3/2", "1"],
             ["1", "3", "2", "1", "1/2", "1"],
             ["2", "2", "4", "2", "2", "2"],
             ["1", "1", "2", "3", "3/2", "1"],
             ["3/2", "1/2", "2", "3/2", "7/4", "1/2"],
             ["1", "1", "2", "1", "1/2", "3"]],
    mw_lattice="P6*[4]",
    q_height="7/4",
    uses_invariants=True,
    edge={"source": "11",
          "param": ("3*(y + 2*(t+a*c-a)*(t-b*c+a*c)*x)"
                    "/(x - 4*t*(t+a*c-b)*(t-b*c+a*c+a*b-a)*(t-b*c+a*c+c-a))"
                    " - 6*(a-1)*(c-b)*t + 2*(2*a*b*c^2-b*c^2-3*a^2*c^2+2*a*c^2"
                    "-a*b^2*c+2*b^2*c+2*a^2*b*c-3*a*b*c-b*c+2*a^2*c-a*c-a*b^2"
                    "-a^2*b+2*a*b)")},
)

# ------------------------------------------------------------------- variants
VARIANT_DIVISORS = {
    "8A": "8", "11A": "11", "15A": "15", "16A": "16", "18A": "18",
    "20A": "20", "20B": "20", "24A": "24", "24B": "24", "24C": "24",
}
for vid, principal in VARIANT_DIVISORS.items():
    fib(vid, principal=principal)

with open("src/kummer/data/fibrations.json", "w") as f:
    json.dump({"fibrations": F}, f, indent=1, sort_keys=True)

# audit: no unary minus directly attached to a powered atom
bad = []
text = json.dumps(F)
for m in re.finditer(r"[-+*/(^]\s*-\s*\w+\^", text):
    bad.append(text[max(0, m.start() - 30):m.end() + 10])
for m in re.finditer(r'"\s*-\s*\w+\^', text):
    bad.append(text[max(0, m.start() - 30):m.end() + 10])
if bad:
    print("MINUS-POWER AUDIT FAILURES:")
    for b in bad:
        print("  ...", b)
else:
    print("minus audit clean;", len(F), "fibrations written (part 1)")
