# formula.py ---
#
# Filename: formula.py
#
# Commentary:
#
# Quantifier-free color formulas over variables x1, x2, ... and the
# number of color tuples in [k]^n that satisfy them. The count is a
# polynomial in k; it is computed by brute force, by summing falling
# factorials over set partitions of the variables, and by interpolation.
#
# Grammar (whitespace is insignificant):
#
#   formula := conj { "|" conj }
#   conj    := unit { "&" unit }
#   unit    := "!" unit | "(" formula ")" | atom | "true" | "false"
#   atom    := var ( "=" | "!=" ) var
#   var     := "x" positive-integer
#
import re
import logging
from dataclasses import dataclass
from itertools import product

from polyzoo.chromatic import check_brute_force
from polyzoo.combinatorics import count_partitions_by_blocks
from polyzoo.config import DEFAULT_BUDGET
from polyzoo.errors import FormulaSyntaxError
from polyzoo.poly import FFPoly, newton_interpolate

# Binding strength used when printing.
_OR, _AND, _UNIT = 1, 2, 3


class ColorFormula:
    """Base class of the formula syntax tree."""

    precedence = _UNIT

    @property
    def nvars(self):
        """Highest variable index used, 0 if none."""
        return max(self.variables(), default=0)

    def variables(self):
        raise NotImplementedError

    def evaluate(self, assignment):
        """Truth value under assignment, a sequence with x_i at index i-1."""
        return self.compile()(assignment)

    def compile(self):
        """A function from color tuples to booleans."""
        raise NotImplementedError

    def _wrapped(self, parent):
        text = str(self)
        return f"({text})" if self.precedence <= parent else text


@dataclass(frozen=True)
class Eq(ColorFormula):
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"Variable indices start at 1: x{self.i}, x{self.j}")

    def variables(self):
        return {self.i, self.j}

    def compile(self):
        i, j = self.i - 1, self.j - 1
        return lambda a: a[i] == a[j]

    def __str__(self):
        return f"x{self.i} = x{self.j}"


@dataclass(frozen=True)
class Not(ColorFormula):
    arg: ColorFormula

    def variables(self):
        return self.arg.variables()

    def compile(self):
        if isinstance(self.arg, Eq):
            i, j = self.arg.i - 1, self.arg.j - 1
            return lambda a: a[i] != a[j]
        inner = self.arg.compile()
        return lambda a: not inner(a)

    def __str__(self):
        if isinstance(self.arg, Eq):
            return f"x{self.arg.i} != x{self.arg.j}"
        text = str(self.arg)
        if self.arg.precedence < _UNIT:
            text = f"({text})"
        return f"!{text}"


@dataclass(frozen=True)
class And(ColorFormula):
    args: tuple
    precedence = _AND

    def variables(self):
        return set().union(*(arg.variables() for arg in self.args))

    def compile(self):
        parts = [arg.compile() for arg in self.args]
        return lambda a: all(part(a) for part in parts)

    def __str__(self):
        if not self.args:
            return "true"
        return " & ".join(arg._wrapped(_AND) for arg in self.args)


@dataclass(frozen=True)
class Or(ColorFormula):
    args: tuple
    precedence = _OR

    def variables(self):
        return set().union(*(arg.variables() for arg in self.args))

    def compile(self):
        parts = [arg.compile() for arg in self.args]
        return lambda a: any(part(a) for part in parts)

    def __str__(self):
        if not self.args:
            return "false"
        return " | ".join(arg._wrapped(_OR) for arg in self.args)


@dataclass(frozen=True)
class Const(ColorFormula):
    value: bool

    def variables(self):
        return set()

    def compile(self):
        value = self.value
        return lambda a: value

    def __str__(self):
        return "true" if self.value else "false"


TRUE = Const(True)
FALSE = Const(False)

_TOKEN = re.compile(r"x(?P<index>\d+)|(?P<op>!=|=|!|&|\||\(|\))|(?P<word>(?:true|false)(?![A-Za-z0-9_]))")


class FormulaParser:
    """Recursive descent parser for color formulas."""

    def __init__(self, text):
        self.text = text
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        tokens, pos = [], 0
        while True:
            while pos < len(text) and text[pos].isspace():
                pos += 1
            if pos == len(text):
                break
            match = _TOKEN.match(text, pos)
            if not match:
                raise FormulaSyntaxError(f"Unexpected character {text[pos]!r}", pos)
            start = pos
            if match.group('index') is not None:
                index = int(match.group('index'))
                if index == 0:
                    raise FormulaSyntaxError("Variable index 0; variables are x1, x2, ...", start)
                tokens.append(('var', index, start))
            elif match.group('op'):
                tokens.append((match.group('op'), None, start))
            else:
                tokens.append((match.group('word'), None, start))
            pos = match.end()
        tokens.append(('end', None, len(text)))
        return tokens

    def _peek(self):
        return self.tokens[self.pos]

    def _advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _expect(self, kind, what):
        token = self._advance()
        if token[0] != kind:
            raise FormulaSyntaxError(f"Expected {what}, found {self._describe(token)}", token[2])
        return token

    @staticmethod
    def _describe(token):
        if token[0] == 'end':
            return "end of input"
        if token[0] == 'var':
            return f"x{token[1]}"
        return repr(token[0])

    def parse(self):
        formula = self._disjunction()
        token = self._peek()
        if token[0] != 'end':
            raise FormulaSyntaxError(f"Unexpected {self._describe(token)}", token[2])
        return formula

    def _disjunction(self):
        args = [self._conjunction()]
        while self._peek()[0] == '|':
            self._advance()
            args.append(self._conjunction())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def _conjunction(self):
        args = [self._unit()]
        while self._peek()[0] == '&':
            self._advance()
            args.append(self._unit())
        return args[0] if len(args) == 1 else And(tuple(args))

    def _unit(self):
        token = self._advance()
        kind = token[0]
        if kind == '!':
            return Not(self._unit())
        if kind == '(':
            inner = self._disjunction()
            self._expect(')', "')'")
            return inner
        if kind == 'true':
            return TRUE
        if kind == 'false':
            return FALSE
        if kind == 'var':
            relation = self._advance()
            if relation[0] not in ('=', '!='):
                raise FormulaSyntaxError(
                    f"Expected '=' or '!=' after x{token[1]}, found {self._describe(relation)}",
                    relation[2])
            right = self._expect('var', "a variable")
            atom = Eq(token[1], right[1])
            return atom if relation[0] == '=' else Not(atom)
        raise FormulaSyntaxError(f"Unexpected {self._describe(token)}", token[2])


def parse_formula(text):
    return FormulaParser(text).parse()


def chromatic_formula(graph):
    """The conjunction of x_u != x_v over the edges of graph (1-indexed).

    The number of variables of the instance is graph.n, see
    chromatic_instance; an edgeless graph gives true.
    """
    atoms = tuple(Not(Eq(u + 1, v + 1)) for u, v, _ in graph.edges)
    if not atoms:
        return TRUE
    return atoms[0] if len(atoms) == 1 else And(atoms)


@dataclass(frozen=True)
class CountingInstance:
    """The finite model with k colors for a formula in nvars variables."""
    formula: ColorFormula
    nvars: int
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"Number of colors must be nonnegative, got {self.k}")
        if self.formula.nvars > self.nvars:
            raise ValueError(f"Formula uses x{self.formula.nvars} but only "
                             f"{self.nvars} variables are declared")


def chromatic_instance(graph, k):
    return CountingInstance(chromatic_formula(graph), graph.n, k)


def count_assignments(instance, budget=None):
    """Number of tuples in [k]^nvars satisfying the formula."""
    budget = budget or DEFAULT_BUDGET
    check_brute_force(budget, instance.nvars, instance.k)
    test = instance.formula.compile()
    return sum(1 for colors in product(range(instance.k), repeat=instance.nvars)
               if test(colors))


def counting_polynomial(formula, nvars, budget=None):
    """The counting function as a falling factorial sum over set partitions.

    A partition of the variables satisfies the formula when equality is read
    as "same block"; it contributes k_(number of blocks), the number of
    injective colorings of its blocks.
    """
    if formula.nvars > nvars:
        raise ValueError(f"Formula uses x{formula.nvars} but nvars={nvars}")
    test = formula.compile()

    def satisfied(blocks):
        pattern = [0] * nvars
        for block_id, block in enumerate(blocks):
            for var in block:
                pattern[var] = block_id
        return test(pattern)

    counts = count_partitions_by_blocks(range(nvars), accept=satisfied, budget=budget)
    return FFPoly(counts.get(i, 0) for i in range(nvars + 1))


def interpolated_polynomial(formula, nvars, budget=None):
    """The counting function interpolated from brute-force counts at k = 0..nvars."""
    values = [count_assignments(CountingInstance(formula, nvars, k), budget)
              for k in range(nvars + 1)]
    logging.debug(f"Counts at k = 0..{nvars}: {values}")
    return newton_interpolate(values)

#
# formula.py ends here
