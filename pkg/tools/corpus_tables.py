"""Verbatim transcriptions of the example tables, in authoring form.

Operators are written as per-basis images: a list over basis columns, each a
dict {row_index: coefficient_string}.  The generator turns these into the
normative sparse-triple JSON files; nothing here is imported at runtime.
"""

# ---- 2-dimensional bialgebra -------------------------------------------

DIM2 = {
    "name": "sec6.dim2",
    "params": ["lambda", "gamma", "p1", "p2", "q1", "q2"],
    "dimension": 2,
    "basis": ["u1", "u2"],
    "mul": [
        [{0: "1"}, {1: "1"}],
        [{1: "1"}, {1: "1"}],
    ],
    "comul": [[(0, 0, "1")], [(1, 1, "1")]],
    "unit": {0: "1"},
    "counit": {0: "1", 1: "1"},
    "RR": [
        [{0: "-lambda"}, {}],
        [{}, {1: "-lambda"}],
        [{0: "-lambda"}, {1: "-lambda"}],
    ],
    "R": [
        [{}, {1: "-lambda"}],
        [{1: "-lambda"}, {1: "-lambda"}],
        [{1: "lambda"}, {}],
        [{}, {0: "lambda", 1: "-lambda"}],
        [{0: "-2*lambda", 1: "lambda"}, {0: "-lambda"}],
        [{0: "-lambda"}, {}],
        [{0: "-lambda"}, {1: "-lambda"}],
        [{0: "-lambda", 1: "-lambda"}, {1: "-lambda"}],
        [{0: "-lambda", 1: "lambda"}, {}],
        [{0: "-lambda"}, {0: "-lambda"}],
        [{0: "lambda", 1: "-lambda"}, {0: "lambda", 1: "-lambda"}],
    ],
    "Q": [
        [{}, {1: "-gamma"}],
        [{0: "-gamma"}, {}],
        [{0: "-gamma"}, {1: "-gamma"}],
    ],
    "RS": [
        ([{1: "p1"}, {}], [{0: "p1", 1: "p2"}, {1: "p2"}]),
        ([{1: "p1"}, {1: "p1"}], [{0: "-p2", 1: "p1"}, {}]),
        ([{1: "p1"}, {1: "p2"}], [{0: "p1 - p2"}, {}]),
        ([{0: "p1"}, {0: "p1"}], [{0: "-p2", 1: "p2"}, {0: "p1", 1: "-p1"}]),
        ([{0: "-p1", 1: "p1"}, {}], [{1: "p2"}, {1: "p2"}]),
        ([{0: "-p1", 1: "p1"}, {0: "-p1", 1: "p1"}],
         [{0: "-(p1+p2)", 1: "p2"}, {0: "-p1"}]),
        ([{0: "-p1", 1: "p1"}, {0: "p1", 1: "-p1"}], [{0: "p1"}, {0: "p1"}]),
        ([{0: "-(p1+p2)", 1: "p1"}, {0: "-p2"}],
         [{0: "-p2", 1: "p2"}, {0: "-p2", 1: "p2"}]),
        ([{0: "p1", 1: "p2"}, {1: "p2"}], [{1: "p1"}, {}]),
        ([{0: "p1"}, {}], [{1: "p2"}, {1: "-p1 + p2"}]),
        ([{}, {1: "-p1"}], [{0: "p1"}, {}]),
        ([{1: "p1"}, {}], [{0: "p1", 1: "-p1"}, {}]),
        ([{1: "p1"}, {}], [{0: "p1", 1: "-p1"}, {1: "-p1"}]),
        ([{1: "p1"}, {}], [{0: "p1"}, {}]),
        ([{1: "p1"}, {}], [{0: "p1", 1: "-p1"}, {}]),
        ([{1: "p1"}, {}], [{0: "p1", 1: "-p1"}, {1: "-p1"}]),
        ([{1: "p1"}, {1: "p1"}], [{0: "p1", 1: "-p1"}, {0: "p1", 1: "-p1"}]),
        ([{1: "p1"}, {1: "p1"}], [{0: "p1", 1: "-p1"}, {0: "p1", 1: "-p1"}]),
        ([{0: "p1", 1: "-p1"}, {}], [{1: "p1"}, {}]),
        ([{0: "p1", 1: "-p1"}, {1: "-p1"}], [{1: "p1"}, {}]),
        ([{0: "p1"}, {}], [{1: "p1"}, {}]),
        ([{0: "p1", 1: "-p1"}, {}], [{1: "p1"}, {}]),
    ],
    "QT": [
        ([{}, {1: "q1"}], [{0: "q2"}, {}]),
        ([{0: "q1"}, {}], [{}, {1: "q2"}]),
        ([{1: "q1"}, {}], [{}, {1: "q1"}]),
        ([{}, {0: "q1", 1: "q1"}], [{0: "q1", 1: "q1"}, {}]),
        ([{}, {0: "q1"}], [{0: "q1"}, {}]),
        ([{0: "q1", 1: "q1"}, {}], [{}, {0: "q1", 1: "q1"}]),
    ],
}

# ---- 3-dimensional bialgebra -------------------------------------------

DIM3 = {
    "name": "sec6.dim3",
    "params": ["lambda", "gamma", "p", "p1", "p2", "p3",
               "q1", "q2", "q3", "s"],
    "relations": {"s": "-p*gamma - p^2"},
    "dimension": 3,
    "basis": ["u1", "u2", "u3"],
    "mul": [
        [{0: "1"}, {1: "1"}, {2: "1"}],
        [{1: "1"}, {1: "1"}, {2: "1"}],
        [{2: "1"}, {2: "1"}, {}],
    ],
    "comul": [
        [(0, 0, "1")],
        [(0, 1, "1"), (1, 0, "1"), (1, 1, "-1")],
        [(0, 2, "1"), (2, 0, "1"), (2, 1, "-1")],
    ],
    "unit": {0: "1"},
    "counit": {0: "1"},
    "RR": [
        [{0: "-lambda"}, {}, {}],
        [{}, {1: "-lambda"}, {}],
        [{}, {}, {2: "-lambda"}],
        [{0: "-lambda"}, {1: "-lambda"}, {}],
        [{}, {1: "-lambda"}, {2: "-lambda"}],
        [{0: "-lambda"}, {}, {2: "-lambda"}],
        [{0: "-lambda"}, {1: "-lambda"}, {2: "-lambda"}],
    ],
    "R": [
        [{}, {}, {2: "-lambda"}],
        [{}, {1: "-lambda"}, {}],
        [{}, {1: "-lambda"}, {2: "-lambda"}],
        [{1: "-lambda"}, {1: "-lambda"}, {}],
        [{1: "-lambda"}, {1: "-lambda"}, {2: "-lambda"}],
        [{1: "lambda"}, {}, {}],
        [{1: "lambda"}, {}, {2: "-lambda"}],
        [{}, {0: "lambda", 1: "-lambda"}, {}],
        [{}, {0: "lambda", 1: "-lambda"}, {2: "-lambda"}],
        [{0: "-2*lambda", 1: "lambda"}, {0: "-lambda"}, {}],
        [{0: "-2*lambda", 1: "lambda"}, {0: "-lambda"}, {2: "-lambda"}],
        [{0: "-lambda"}, {}, {}],
        [{0: "-lambda"}, {}, {2: "-lambda"}],
        [{0: "-lambda"}, {1: "-lambda"}, {}],
        [{0: "-lambda"}, {1: "-lambda"}, {2: "-lambda"}],
        [{0: "-lambda", 1: "-lambda"}, {1: "-lambda"}, {}],
        [{0: "-lambda", 1: "-lambda"}, {1: "-lambda"}, {2: "-lambda"}],
        [{0: "-lambda", 1: "lambda"}, {}, {}],
        [{0: "-lambda", 1: "lambda"}, {}, {2: "-lambda"}],
        [{0: "-lambda"}, {0: "-lambda"}, {}],
        [{0: "-lambda"}, {0: "-lambda"}, {2: "-lambda"}],
        [{0: "lambda", 1: "-lambda"}, {0: "lambda", 1: "-lambda"}, {}],
        [{0: "lambda", 1: "-lambda"}, {0: "lambda", 1: "-lambda"},
         {2: "-lambda"}],
    ],
    "Q": [
        [{0: "-gamma"}, {1: "-gamma"}, {2: "-gamma"}],
        [{0: "-gamma"}, {1: "-gamma"}, {}],
        [{0: "-gamma"}, {}, {2: "-gamma"}],
        [{}, {1: "-gamma"}, {2: "-gamma"}],
        [{0: "-gamma"}, {}, {}],
        [{}, {1: "-gamma"}, {}],
        [{}, {}, {2: "-gamma"}],
        [{}, {1: "p", 2: "-s"}, {1: "-s", 2: "-(gamma+p)"}],
        [{}, {1: "p", 2: "s"}, {1: "s", 2: "-(gamma+p)"}],
        [{0: "-gamma"}, {1: "p", 2: "-s"}, {1: "-s", 2: "-(gamma+p)"}],
        [{0: "-gamma"}, {1: "p", 2: "s"}, {1: "s", 2: "-(gamma+p)"}],
    ],
    "sqrt_items": {"Q": [8, 9, 10, 11]},
    "spec_hint": {"free": ["t", "pv"],
                  "assign": {"p": "pv", "gamma": "-pv - t^2/pv", "s": "t"}},
    "RS": [
        ([{2: "p1"}, {2: "p1"}, {2: "-p2"}],
         [{0: "p2 - p3", 1: "p3"}, {1: "p2"}, {}]),
        ([{2: "p1"}, {}, {}],
         [{1: "p2", 2: "p1 + p3"}, {1: "p2", 2: "p3"}, {2: "p2"}]),
        ([{1: "p1", 2: "p2"}, {2: "p2"}, {2: "-p3"}],
         [{0: "p1", 1: "p3"}, {1: "p3"}, {}]),
        ([{0: "-p1", 1: "p1"}, {0: "-p2", 1: "p2"}, {}],
         [{0: "-p2", 2: "p3"}, {0: "-p2", 2: "p3"}, {2: "-p2"}]),
        ([{0: "-p1", 1: "p1"}, {0: "-p1", 1: "p1"}, {0: "p2", 1: "-p2"}],
         [{0: "-(p1+p3)", 1: "p3"}, {0: "-p1"}, {0: "p2"}]),
        ([{0: "-(p1+p2)", 1: "p1"}, {0: "-p2"}, {0: "p3"}],
         [{0: "-p2", 1: "p2"}, {0: "-p2", 1: "p2"}, {0: "p3", 1: "-p3"}]),
        ([{0: "p1", 1: "-p1", 2: "p2"}, {0: "p1", 1: "-p1", 2: "p2"},
          {2: "-p1"}],
         [{1: "p1"}, {1: "p1"}, {}]),
    ],
    "QT": [
        ([{0: "-q1"}, {}, {2: "-q1"}], [{}, {1: "q1"}, {}]),
        ([{0: "-q1", 1: "q1"}, {0: "-q1", 1: "q1"}, {}],
         [{1: "q1"}, {0: "q1"}, {2: "q1"}]),
        ([{0: "-q1", 1: "q1"}, {}, {2: "-q1"}],
         [{0: "q1", 1: "q1"}, {0: "q1", 1: "q1"}, {}]),
        ([{0: "-(q1^2+q2^2)/q1"}, {0: "-(q1^2+q2^2)/q1"},
          {0: "(q1^2+q2^2)/q2"}],
         [{}, {1: "q1", 2: "q2"}, {1: "q2", 2: "q2^2/q1"}]),
        ([{0: "-(q1^2+q2^2)/q1", 1: "q1", 2: "q2"},
          {0: "-(2*q1^2+q2^2)/q1"}, {0: "(2*q1^2+q2^2)/q2"}],
         [{0: "q1", 1: "q1", 2: "q2"}, {0: "q1", 1: "q1", 2: "q2"},
          {0: "q2", 1: "q2", 2: "q2^2/q1"}]),
        ([{0: "-q1", 1: "q1"}, {0: "-q1", 1: "q1"}, {0: "q2", 1: "-q2"}],
         [{1: "q1"}, {0: "q1"}, {}]),
        ([{}, {0: "q1", 1: "-(q1*q3+q2^2)/q3", 2: "q2"},
          {0: "q1*q3/q2", 1: "(q1*q3+q2^2)/q2", 2: "-q3"}],
         [{0: "(q3^2+q2^2)/q3"}, {1: "q3", 2: "q2"},
          {1: "q2", 2: "q2^2/q3"}]),
    ],
}

# ---- 4-dimensional Taft-Sweedler bialgebra (sec6 variant) ----------------

T2_MUL = [
    [{0: "1"}, {1: "1"}, {2: "1"}, {3: "1"}],
    [{1: "1"}, {0: "1"}, {3: "1"}, {2: "1"}],
    [{2: "1"}, {3: "-1"}, {}, {}],
    [{3: "1"}, {2: "-1"}, {}, {}],
]

DIM4 = {
    "name": "sec6.dim4",
    "params": ["lambda", "gamma", "p1", "p2", "p3", "p4",
               "q1", "q2", "q3", "q4"],
    "dimension": 4,
    "basis": ["u1", "u2", "u3", "u4"],
    "mul": T2_MUL,
    "comul": [
        [(0, 0, "1")],
        [(1, 1, "1")],
        [(2, 0, "1"), (1, 2, "1")],
        [(3, 1, "1"), (0, 3, "1")],
    ],
    "alt_comul": [
        [(0, 0, "1")],
        [(1, 1, "1")],
        [(0, 2, "1"), (2, 1, "1")],
        [(1, 3, "1"), (3, 0, "1")],
    ],
    "unit": {0: "1"},
    "counit": {0: "1", 1: "1"},
    "RR": [
        [{}, {}, {2: "-lambda"}, {3: "-lambda"}],
        [{0: "-lambda"}, {1: "-lambda"}, {}, {}],
        [{0: "-lambda"}, {1: "-lambda"}, {2: "-lambda"}, {3: "-lambda"}],
    ],
    "R": [
        [{},
         {0: "-p1", 1: "p1", 2: "-(lambda+p1)*(lambda+p1+p2)/p3",
          3: "(lambda+p1)*(lambda+p2)/p3"},
         {0: "-p3", 1: "p3", 2: "-(2*lambda+p1+p2)", 3: "lambda+p2"},
         {0: "-p3", 1: "p3", 2: "-(lambda+p1+p2)", 3: "p2"}],
        [{0: "-lambda"},
         {0: "lambda+p1", 1: "p1", 2: "-(lambda+p1)*(lambda+p1+p2)/p3",
          3: "(lambda+p1)*(lambda+p2)/p3"},
         {0: "p3", 1: "p3", 2: "-(2*lambda+p1+p2)", 3: "lambda+p2"},
         {0: "p3", 1: "p3", 2: "-(lambda+p1+p2)", 3: "p2"}],
        [{0: "-lambda"},
         {0: "lambda", 2: "p1", 3: "p1*p2/(lambda+p2)"},
         {2: "-(lambda+p2)", 3: "-p2"},
         {2: "lambda+p2", 3: "p2"}],
        [{0: "-lambda"},
         {0: "lambda", 2: "lambda*(lambda+p1)/p2", 3: "lambda*(lambda+p1)/p2"},
         {0: "-p2", 1: "-p2", 2: "-(2*lambda+p1)", 3: "-(lambda+p1)"},
         {0: "p2", 1: "p2", 2: "lambda+p1", 3: "p1"}],
        [{0: "1/2*lambda", 1: "-1/2*lambda", 2: "p1", 3: "p2"},
         {0: "1/2*lambda", 1: "-1/2*lambda", 2: "-p2", 3: "p1"},
         {2: "-1/2*lambda", 3: "-1/2*lambda"},
         {2: "-1/2*lambda", 3: "-1/2*lambda"}],
    ],
    "Q": [
        [{0: "-gamma"}, {1: "-gamma"}, {2: "-gamma"}, {3: "-gamma"}],
        [{0: "-gamma"}, {1: "-gamma"}, {2: "-gamma"}, {}],
        [{0: "-gamma"}, {1: "-gamma"}, {}, {}],
        [{0: "-gamma"}, {}, {}, {}],
        [{0: "-gamma"}, {1: "-gamma"}, {}, {3: "-gamma"}],
        [{}, {}, {2: "-gamma"}, {3: "-gamma"}],
        [{}, {1: "-gamma"}, {}, {}],
    ],
    "RS": [
        ([{0: "-p1"}, {}, {}, {}],
         [{3: "p2"}, {3: "p3"}, {}, {3: "p1"}]),
        ([{0: "-(p1+p2)"}, {1: "-(p1+p2)"}, {}, {}],
         [{2: "p3", 3: "-p3*p2/p1"}, {2: "-p3", 3: "p3*p2/p1"},
          {2: "p1", 3: "-p2"}, {2: "-p1", 3: "p2"}]),
        ([{0: "-(p1+p2)"}, {1: "-(p1+p2)"}, {}, {}],
         [{2: "p3", 3: "p3*p2/p1"}, {2: "p3", 3: "p3*p2/p1"},
          {2: "p1", 3: "p2"}, {2: "p1", 3: "p2"}]),
        ([{0: "-p1"}, {1: "-p1"}, {}, {}],
         [{2: "p3", 3: "p4"}, {2: "p4", 3: "p3"}, {2: "p1"}, {3: "p1"}]),
        ([{0: "-p1"}, {1: "-p1"}, {}, {}],
         [{3: "p2"}, {3: "-p2"}, {3: "-p1"}, {3: "p1"}]),
        ([{0: "-p1"}, {1: "-p1"}, {}, {}],
         [{3: "p2"}, {3: "p2"}, {3: "p1"}, {3: "p1"}]),
        ([{0: "-(p1+p2)"}, {1: "-(p1+p2)"}, {}, {}],
         [{}, {}, {2: "p1", 3: "-p2"}, {2: "-p1", 3: "p2"}]),
        ([{0: "-2*p1"}, {1: "-2*p1"}, {}, {}],
         [{2: "p2", 3: "-p2"}, {2: "-p2", 3: "p2"},
          {2: "p1", 3: "-p1"}, {2: "-p1", 3: "p2"}]),
        ([{}, {}, {2: "-p1"}, {3: "-p1"}],
         [{0: "p1"}, {1: "p1"}, {}, {}]),
        ([{}, {}, {}, {3: "-p1"}],
         [{0: "p1"}, {}, {}, {}]),
    ],
    # item 1's third image prints a coefficient with no basis factor; the
    # completion is determined computationally (see generator notes)
    "QT": [
        ([{}, {}, {1: "q1", "TRUNCATED": "-q1*q3/q2"}, {1: "q2", 3: "-q3"}],
         [{0: "q4"}, {1: "q3"}, {}, {}]),
        ([{}, {1: "q1", 2: "q2"}, {2: "q3"}, {1: "q1*q4/q2", 3: "q4"}],
         [{0: "-q3"}, {}, {}, {}]),
        ([{1: "q1", 3: "q2"}, {}, {1: "q3", 3: "q3*q2/q1"},
          {1: "q4", 3: "q2*q4/q1"}],
         [{}, {1: "(q1^2-q4*q2)/q1"}, {}, {}]),
        ([{}, {1: "q1", 2: "q2"}, {2: "-q3"}, {}],
         [{0: "q3"}, {}, {}, {3: "q3"}]),
        ([{1: "q1", 3: "q2"}, {}, {},
          {1: "q1*(q1-q3)/q2", 3: "q1-q3"}],
         [{}, {1: "q3"}, {2: "q3"}, {}]),
        ([{1: "q1", 3: "q2"}, {1: "-q3"}, {},
          {1: "q1*(q1+q3)/q2", 3: "q1"}],
         [{}, {}, {2: "q3"}, {}]),
        ([{0: "q1", 1: "q1"}, {}, {1: "q2", 2: "q1"}, {3: "-q1"}],
         [{}, {0: "q1", 1: "q1"}, {}, {}]),
        ([{0: "q1", 1: "q1"}, {}, {2: "q1", 3: "-q1"}, {}],
         [{}, {0: "q1", 1: "q1"}, {}, {2: "q1", 3: "-q1"}]),
        ([{0: "q1", 1: "q1"}, {}, {2: "q1", 3: "q1"}, {}],
         [{}, {0: "q1", 1: "q1"}, {}, {2: "-q1", 3: "-q1"}]),
        ([{0: "q1"}, {1: "-q2"}, {}, {3: "-q2"}],
         [{}, {}, {2: "q2"}, {}]),
    ],
}

# ---- Taft-Sweedler bialgebra, leg-swapped comultiplication variant --------

EX36 = {
    "name": "ex3.6",
    "params": ["p", "q1", "q2"],
    "dimension": 4,
    "basis": ["u1", "u2", "u3", "u4"],
    "mul": T2_MUL,
    "comul": [
        [(0, 0, "1")],
        [(1, 1, "1")],
        [(0, 2, "1"), (2, 1, "1")],
        [(1, 3, "1"), (3, 0, "1")],
    ],
    "unit": {0: "1"},
    "counit": {0: "1", 1: "1"},
    "alt_comul": [
        [(0, 0, "1")],
        [(1, 1, "1")],
        [(2, 0, "1"), (1, 2, "1")],
        [(3, 1, "1"), (0, 3, "1")],
    ],
    "RS": [
        ([{}, {}, {}, {3: "p"}], [{0: "-p"}, {}, {}, {}]),
        ([{}, {}, {2: "-p"}, {3: "-p"}], [{0: "p"}, {1: "p"}, {}, {}]),
        ([{}, {}, {2: "p"}, {}], [{0: "-p"}, {}, {}, {}]),
        ([{0: "-p"}, {}, {}, {}], [{}, {}, {2: "p"}, {}]),
        ([{0: "-p"}, {1: "-p"}, {}, {}], [{}, {}, {2: "p"}, {2: "p"}]),
        ([{0: "-p"}, {1: "-p"}, {}, {}], [{}, {}, {2: "p"}, {2: "-p"}]),
        ([{0: "-p"}, {}, {}, {}], [{}, {}, {}, {3: "p"}]),
        ([{0: "p"}, {}, {}, {}], [{}, {}, {}, {}]),
    ],
    "QT": [
        ([{}, {}, {}, {3: "-q1"}], [{0: "q1"}, {1: "q2"}, {2: "q2"}, {}]),
        ([{}, {}, {}, {3: "-q1"}], [{0: "q1"}, {1: "q2"}, {}, {}]),
        ([{}, {}, {2: "-q1"}, {}], [{0: "q1"}, {1: "q2"}, {}, {3: "q2"}]),
        ([{}, {}, {2: "-q1"}, {}], [{0: "q1"}, {1: "q2"}, {}, {}]),
        ([{}, {}, {2: "-q1"}, {3: "-q1"}], [{0: "q1"}, {1: "q2"}, {}, {}]),
        ([{}, {1: "-q1"}, {}, {}], [{0: "q1"}, {}, {2: "q2"}, {}]),
        ([{}, {1: "-q1"}, {}, {}], [{0: "q2"}, {}, {2: "q1"}, {3: "q1"}]),
        ([{}, {1: "-q1"}, {}, {3: "-q2"}], [{0: "q2"}, {}, {0: "q1"}, {}]),
    ],
}

# ---- 3-dimensional non-(co)unital bialgebra -----------------------------

EX316 = {
    "name": "ex3.16",
    "params": ["lambda1", "lambda2", "lambda3", "lambda4"],
    "dimension": 3,
    "basis": ["x", "y", "z"],
    "mul": [
        [{0: "1"}, {1: "1"}, {2: "1"}],
        [{1: "1"}, {1: "1"}, {2: "1"}],
        [{2: "1"}, {}, {}],
    ],
    "comul": [[(0, 0, "1")], [(1, 1, "1")], [(2, 2, "1")]],
    "bisystem": {
        "R": [{2: "lambda1"}, {2: "lambda2"}, {}],
        "S": [{1: "-lambda3"}, {}, {}],
        "Q": [{2: "lambda4"}, {2: "lambda4"}, {}],
        "T": [{0: "lambda4", 2: "lambda4"}, {1: "lambda4", 2: "lambda4"},
              {2: "lambda4"}],
    },
}
