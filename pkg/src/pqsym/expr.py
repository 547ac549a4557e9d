"""A small expression language over basis elements.

Grammar, loosest binding first::

    expr    := tensor (('+' | '-') tensor)*
    tensor  := prod (('⊗' | '@') prod)*
    prod    := istar (('*' | '·') istar)*
    istar   := unary (('⊛' | '.i.' | 'istar') unary)*
    unary   := '-' unary | primary
    primary := INT | BASIS '[' word ']' | 'S' '[' word ']' | 'Rib' '[' word ']'
             | 'J' '(' INT ')' | FUNC '(' args ')' | '(' expr ')'

``BASIS`` is one of F, G, P, R, M.  ``FUNC`` is one of Delta, iDelta, park,
std, toBasis, project.  Words inside brackets are comma separated, or a
single run of digits when every letter is below 10.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import algebra, catalan
from .errors import PQSymError
from .lincomb import BASES, LinearCombination, Tensor, change_basis, linear_extend
from .words import as_word, format_word, park, parse_word, standardize

FUNCS = ("Delta", "iDelta", "park", "std", "toBasis", "project")

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<iop>\.i\.)|(?P<name>[A-Za-z]+)|(?P<op>[\[\](),+\-−*·⊛⊗@Δ]))"
)


class ParseError(PQSymError, SyntaxError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EvalError(PQSymError, TypeError):
    pass


# --- AST -------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Atom:
    basis: str  # F G P R M, or S / Rib for composition-indexed Sym elements
    index: tuple


@dataclass(frozen=True)
class JNode:
    n: int


@dataclass(frozen=True)
class WordLit:
    word: tuple


@dataclass(frozen=True)
class TagLit:
    tag: str


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * istar tensor
    left: "Node"
    right: "Node"


Node = Union[Num, Atom, JNode, WordLit, TagLit, Call, Neg, BinOp]


# --- tokenizer / parser ----------------------------------------------------

def tokenize(text: str) -> list[tuple]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            pos += len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind, value = m.lastgroup, m.group(m.lastgroup)
        if kind == "iop" or (kind == "name" and value == "istar"):
            kind, value = "op", "⊛"
        elif kind == "op":
            value = {"−": "-", "·": "*", "@": "⊗"}.get(value, value)
        tokens.append((kind, value, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, found {v if v is not None else 'end of input'!r}", pos)

    def at(self, *values):
        return self.peek()[1] in values and self.peek()[0] == "op"

    def parse(self) -> Node:
        node = self.expr()
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)
        return node

    def _chain(self, sub, ops, label=None):
        node = sub()
        while self.at(*ops):
            op = self.take()[1]
            node = BinOp(label or op, node, sub())
        return node

    def expr(self):
        return self._chain(self.tensor, ("+", "-"))

    def tensor(self):
        return self._chain(self.prod, ("⊗",), "tensor")

    def prod(self):
        return self._chain(self.istar, ("*",))

    def istar(self):
        return self._chain(self.unary, ("⊛",), "istar")

    def unary(self):
        if self.at("-"):
            self.take()
            return Neg(self.unary())
        return self.primary()

    def word_body(self, close: str) -> tuple:
        """Letters up to ``close``: comma separated ints or one compact digit run."""
        letters = []
        start = self.peek()[2]
        while not self.at(close):
            kind, v, pos = self.take()
            if kind != "int":
                raise ParseError(f"expected a letter, found {v if v is not None else 'end of input'!r}", pos)
            letters.append(v)
            if not self.at(close):
                self.expect(",")
        self.expect(close)
        try:
            if len(letters) == 1:
                return parse_word(letters[0])
            return as_word(int(x) for x in letters)
        except PQSymError as exc:
            raise ParseError(str(exc), start) from None

    def primary(self):
        kind, v, pos = self.take()
        if kind == "int":
            return Num(int(v))
        if kind == "op" and v == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "op" and v == "Δ":
            self.expect("(")
            arg = self.expr()
            self.expect(")")
            return Call("Delta", (arg,))
        if kind != "name":
            raise ParseError(f"unexpected {v if v is not None else 'end of input'!r}", pos)
        if v in BASES or v in ("S", "Rib"):
            if not self.at("["):
                if v in BASES:
                    return TagLit(v)
                raise ParseError(f"{v} needs a bracketed index", pos)
            self.take()
            return Atom(v, self.word_body("]"))
        if v == "J":
            self.expect("(")
            k, n, p = self.take()
            if k != "int":
                raise ParseError("J expects a non-negative integer", p)
            self.expect(")")
            return JNode(int(n))
        if v in FUNCS:
            self.expect("(")
            if v in ("park", "std") and self.peek()[0] == "int" and self.tokens[self.i + 1][1] in (",", ")"):
                return Call(v, (WordLit(self.word_body(")")),))
            args = [self.expr()]
            while self.at(","):
                self.take()
                args.append(self.expr())
            self.expect(")")
            return Call(v, tuple(args))
        raise ParseError(f"unknown name {v!r}", pos)


def parse(text: str) -> Node:
    return _Parser(text).parse()


# --- printing --------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "tensor": 2, "*": 3, "istar": 4}
_SYMBOL = {"+": "+", "-": "-", "tensor": "⊗", "*": "*", "istar": "⊛"}


def to_source(node: Node, parent: int = 0) -> str:
    """Render an AST back to text that parses to the same tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Atom):
        return f"{node.basis}[{format_word(node.index)}]"
    if isinstance(node, JNode):
        return f"J({node.n})"
    if isinstance(node, WordLit):
        return format_word(node.word)
    if isinstance(node, TagLit):
        return node.tag
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_source(a) for a in node.args)})"
    if isinstance(node, Neg):
        return "-" + to_source(node.arg, 5)
    prec = _PREC[node.op]
    # all operators are left-associative: the right operand needs a strictly higher level
    text = f"{to_source(node.left, prec)} {_SYMBOL[node.op]} {to_source(node.right, prec + 1)}"
    return f"({text})" if prec < parent else text


# --- evaluation ------------------------------------------------------------

Value = Union[int, LinearCombination, Tensor, tuple]


def _family_product(x: LinearCombination, y: LinearCombination) -> LinearCombination:
    if x.basis != y.basis:
        raise EvalError(f"external product needs matching bases, got {x.basis} and {y.basis}")
    if x.basis in ("F", "G"):
        return algebra.product(x, y)
    if x.basis in ("P", "R"):
        return catalan.product(x, y)
    return catalan.product_M_lc(x, y)


def _index_product(basis: str):
    def mult(i, j):
        return _family_product(LinearCombination.term(basis, i), LinearCombination.term(basis, j))

    return mult


def _multiply(x: Value, y: Value, node: Node) -> Value:
    if isinstance(x, int) and isinstance(y, (int, LinearCombination, Tensor)):
        return x * y
    if isinstance(y, int) and isinstance(x, (LinearCombination, Tensor)):
        return y * x
    if isinstance(x, LinearCombination) and isinstance(y, LinearCombination):
        return _family_product(x, y)
    if isinstance(x, Tensor) and isinstance(y, Tensor):
        if x.bases != y.bases or len(set(x.bases)) != 1:
            raise EvalError(f"tensor product of {x.bases} and {y.bases} in {to_source(node)}")
        return algebra.tensor_multiply(x, y, _index_product(x.bases[0]))
    raise EvalError(f"cannot multiply {_kind(x)} by {_kind(y)} in {to_source(node)}")


def _istar(x: Value, y: Value, node: Node) -> Value:
    if not (isinstance(x, LinearCombination) and isinstance(y, LinearCombination)):
        raise EvalError(f"internal product needs two basis combinations in {to_source(node)}")
    if x.basis != y.basis:
        raise EvalError(f"internal product needs matching bases, got {x.basis} and {y.basis}")
    if None not in (x.degree, y.degree) and x.degree != y.degree:
        raise EvalError(f"internal product needs equal degrees ({x.degree} vs {y.degree}) in {to_source(node)}")
    if x.basis == "F":
        return algebra.internal_product(x, y)
    if x.basis in ("P", "R"):
        return catalan.internal_product(x, y)
    raise EvalError(f"no internal product on basis {x.basis}; use iDelta on the dual side")


def _tensor(x: Value, y: Value, node: Node) -> Tensor:
    def as_tensor(v, other):
        if isinstance(v, Tensor):
            return v
        if isinstance(v, LinearCombination):
            return Tensor((v.basis,), {(k,): c for k, c in v.items()})
        if isinstance(v, int):
            basis = (other.bases[0] if isinstance(other, Tensor) else getattr(other, "basis", None))
            if basis is None:
                raise EvalError(f"cannot infer the basis of the scalar factor in {to_source(node)}")
            return Tensor((basis,), {((),): v})
        raise EvalError(f"cannot tensor a {_kind(v)} in {to_source(node)}")

    tx, ty = as_tensor(x, y), as_tensor(y, x)
    return Tensor(tx.bases + ty.bases, [(kx + ky, c * d) for kx, c in tx.items() for ky, d in ty.items()])


def _add(x: Value, y: Value, node: Node, sign: int) -> Value:
    if isinstance(x, int) and isinstance(y, int):
        return x + sign * y
    if type(x) is type(y) and isinstance(x, (LinearCombination, Tensor)):
        try:
            return x + sign * y
        except PQSymError as exc:
            raise EvalError(f"{exc} in {to_source(node)}") from None
    raise EvalError(f"cannot add {_kind(x)} and {_kind(y)} in {to_source(node)}")


def _kind(v) -> str:
    if isinstance(v, LinearCombination):
        return f"{v.basis}-combination"
    if isinstance(v, Tensor):
        return "tensor"
    if isinstance(v, tuple):
        return "word"
    return type(v).__name__


def _lincomb(v, node, name) -> LinearCombination:
    if not isinstance(v, LinearCombination):
        raise EvalError(f"{name} expects a basis combination, got a {_kind(v)} in {to_source(node)}")
    return v


def _call(node: Call) -> Value:
    name, args = node.name, node.args
    arity = {"toBasis": 2}.get(name, 1)
    if len(args) != arity:
        raise EvalError(f"{name} takes {arity} argument(s), got {len(args)}")
    if name in ("park", "std"):
        f = park if name == "park" else standardize
        if isinstance(args[0], WordLit):
            return f(args[0].word)
        value = evaluate(args[0], strict=False)
        if isinstance(value, tuple):
            return f(value)
        return linear_extend(f, _lincomb(value, node, name))
    if name == "toBasis":
        if not isinstance(args[1], TagLit):
            raise EvalError("toBasis expects a basis tag (F, G, P, R or M) as second argument")
        return change_basis(_lincomb(evaluate(args[0]), node, name), args[1].tag)
    x = _lincomb(evaluate(args[0]), node, name)
    if name == "Delta":
        if x.basis in ("F", "G"):
            return algebra.coproduct(x)
        if x.basis in ("P", "R"):
            return catalan.coproduct(x)
        raise EvalError(f"Delta is not available on basis {x.basis}")
    if name == "iDelta":
        if x.basis == "G":
            return algebra.internal_coproduct(x)
        if x.basis == "M":
            return catalan.internal_coproduct_M_lc(x)
        raise EvalError(f"iDelta acts on G or M, got {x.basis}")
    if name == "project":
        if x.basis not in ("P", "R"):
            raise EvalError(f"project acts on P or R, got {x.basis}")
        return change_basis(catalan.project_to_sym(x).value, x.basis)
    raise EvalError(f"unknown function {name}")


def evaluate(node: Node | str, strict: bool = True) -> Value:
    """Evaluate an expression tree (or source text).

    With ``strict`` off, F and G atoms may carry arbitrary words; ``park``
    and ``std`` evaluate their argument that way so they can be extended
    linearly over non-parking indices.
    """
    if isinstance(node, str):
        node = parse(node)
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Atom):
        if node.basis == "S":
            return catalan.j_S(node.index).value
        if node.basis == "Rib":
            return LinearCombination.term("R", catalan.block_word(node.index))
        atom = LinearCombination.term(node.basis, node.index)
        return atom.validate() if strict or node.basis not in ("F", "G") else atom
    if isinstance(node, JNode):
        return catalan.J(node.n)
    if isinstance(node, WordLit):
        return node.word
    if isinstance(node, TagLit):
        raise EvalError(f"basis tag {node.tag} used as a value")
    if isinstance(node, Call):
        return _call(node)
    if isinstance(node, Neg):
        value = evaluate(node.arg, strict)
        if isinstance(value, tuple):
            raise EvalError("cannot negate a word")
        return -value
    x, y = evaluate(node.left, strict), evaluate(node.right, strict)
    if node.op in ("+", "-"):
        return _add(x, y, node, 1 if node.op == "+" else -1)
    if node.op == "*":
        return _multiply(x, y, node)
    if node.op == "istar":
        return _istar(x, y, node)
    return _tensor(x, y, node)


def format_value(value: Value) -> str:
    if isinstance(value, tuple):
        return format_word(value)
    return str(value)


def value_to_dict(value: Value) -> dict:
    if isinstance(value, tuple):
        return {"word": list(value)}
    if isinstance(value, int):
        return {"scalar": str(value)}
    return value.to_dict()
