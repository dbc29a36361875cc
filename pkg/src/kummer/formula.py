"""Recursive-descent parser for the catalog formula grammar.

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := base ('^' uint)?
    base   := atom | '(' expr ')' | '-' base
    atom   := integer | variable

Every displayed equation ships as data in this grammar, so transcription
errors surface as verification failures rather than code bugs.  ASTs are
plain tuples; evaluation is exact over whatever ring the environment
supplies (rationals, polynomials, rational functions, multivariate polys).
"""

from __future__ import annotations

from .rationals import QQ

DEFAULT_VARIABLES = (
    "a", "b", "c", "t", "x", "y",
    "I2", "I4", "I5", "I6", "I10",
    "alpha", "beta", "gamma", "mu",
)


class FormulaError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: ...{text[max(0, pos - 10):pos + 10]!r}...")
        self.pos = pos


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.n = len(text)
        self.i = 0
        self.variables = set(variables)

    def error(self, msg):
        raise FormulaError(msg, self.i, self.text)

    def skip_ws(self):
        while self.i < self.n and self.text[self.i] in " \t\n":
            self.i += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.i] if self.i < self.n else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def parse(self):
        node = self.expr()
        self.skip_ws()
        if self.i != self.n:
            self.error("trailing input")
        return node

    def expr(self):
        node = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.i += 1
                node = ("add", node, self.term())
            elif ch == "-":
                self.i += 1
                node = ("sub", node, self.term())
            else:
                return node

    def term(self):
        node = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.i += 1
                node = ("mul", node, self.factor())
            elif ch == "/":
                self.i += 1
                node = ("div", node, self.factor())
            else:
                return node

    def factor(self):
        node = self.base()
        if self.peek() == "^":
            self.i += 1
            self.skip_ws()
            start = self.i
            while self.i < self.n and self.text[self.i].isdigit():
                self.i += 1
            if self.i == start:
                self.error("exponent must be a nonnegative integer")
            node = ("pow", node, int(self.text[start:self.i]))
        return node

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        if ch == "-":
            self.i += 1
            return ("neg", self.base())
        if ch.isdigit():
            start = self.i
            while self.i < self.n and self.text[self.i].isdigit():
                self.i += 1
            return ("num", QQ(int(self.text[start:self.i])))
        if ch.isalpha() or ch == "_":
            start = self.i
            while self.i < self.n and (self.text[self.i].isalnum() or self.text[self.i] == "_"):
                self.i += 1
            name = self.text[start:self.i]
            if name not in self.variables:
                self.i = start
                self.error(f"unknown variable {name!r}")
            return ("var", name)
        self.error("expected a number, variable, or parenthesized expression")


def parse_formula(text: str, variables=DEFAULT_VARIABLES):
    return _Parser(text, variables).parse()


def eval_formula(ast, env: dict):
    """Evaluate over the ring of the environment values (exact)."""
    op = ast[0]
    if op == "num":
        return ast[1]
    if op == "var":
        try:
            return env[ast[1]]
        except KeyError:
            raise KeyError(f"no value supplied for variable {ast[1]!r}") from None
    if op == "neg":
        return -eval_formula(ast[1], env)
    if op == "pow":
        return eval_formula(ast[1], env) ** ast[2]
    a = eval_formula(ast[1], env)
    b = eval_formula(ast[2], env)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"bad AST node {op!r}")


def print_formula(ast) -> str:
    """Serialize; parse(print(ast)) reproduces the AST up to normalization."""
    return _pr(ast, 0)


# precedence levels: 0 add/sub, 1 mul/div, 2 pow/neg, 3 atoms
def _pr(ast, parent_level: int) -> str:
    op = ast[0]
    if op == "num":
        v = ast[1]
        s = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        if v < 0 and parent_level > 0:
            return f"({s})"
        return s
    if op == "var":
        return ast[1]
    if op == "neg":
        s = "-" + _pr(ast[1], 2)
        return f"({s})" if parent_level >= 1 else s
    if op == "pow":
        return f"{_pr(ast[1], 3)}^{ast[2]}"
    sym = {"add": "+", "sub": "-", "mul": "*", "div": "/"}[op]
    level = 0 if op in ("add", "sub") else 1
    left = _pr(ast[1], level)
    right = _pr(ast[2], level + 1)
    s = f"{left}{sym}{right}"
    if level < parent_level:
        return f"({s})"
    return s


def normalize(ast):
    """Canonical form used for round-trip comparison."""
    return parse_formula(print_formula(ast))
