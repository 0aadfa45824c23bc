"""Expression trees for q-series identities, with a small text DSL.

Grammar (whitespace insensitive)::

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := atom ('^' integer)?
    atom     := 'Pi' '(' qarg ')' | 'psi' '(' qarg ')' | 'phi' '(' qarg ')'
              | 'sqrt' '(' expr ')' | 'q' '^' rational | rational | '(' expr ')'
    qarg     := 'q' ('^' posint)?
    rational := integer ('/' integer)?

A rational after '^' binds greedily, so ``q^1/2`` is the exponent 1/2; braces
are also accepted there (``q^{1/2}``) and ignored.  ``q^r`` denotes the
q-power q^r, which is the t-power t^(4r); r must therefore be a quarter
integer (4r integral) or :class:`QPowNotQuarterIntegral` is raised.

Parse failures raise :class:`ParseError` carrying the byte offset into the
UTF-8 encoding of the input and the set of token descriptions that were
expected at that point.  A builder or sqrt call with the wrong number of
arguments raises :class:`ArityError` instead (same offset semantics).

:func:`to_text` renders a tree back to the grammar; ``parse(to_text(e))``
reproduces ``e`` node for node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class ParseError(Exception):
    """Syntax error with a byte offset and the set of expected tokens."""

    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = expected
        hint = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{message} at byte {offset}{hint}")


class ArityError(ParseError):
    """A call supplied the wrong number of arguments."""

    def __init__(self, message: str, offset: int):
        super().__init__(message, offset)


class QPowNotQuarterIntegral(ParseError):
    """q^r with 4r not an integer cannot be represented as a power of t."""

    def __init__(self, r: Fraction, offset: int):
        self.exponent = r
        super().__init__(f"q^{r} is not a quarter-integral power", offset)


# ----------------------------------------------------------------------
# expression nodes


class Expr:
    """Base class for identity expression nodes."""

    __slots__ = ()


def _check_power_index(k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError("builder power index must be a positive integer")


@dataclass(frozen=True)
class Pi(Expr):
    """Pi_{q^k}."""

    k: int

    def __post_init__(self) -> None:
        _check_power_index(self.k)


@dataclass(frozen=True)
class Psi(Expr):
    """psi(q^k)."""

    k: int

    def __post_init__(self) -> None:
        _check_power_index(self.k)


@dataclass(frozen=True)
class Phi(Expr):
    """phi(q^k)."""

    k: int

    def __post_init__(self) -> None:
        _check_power_index(self.k)


@dataclass(frozen=True)
class QPow(Expr):
    """q^r with 4r integral, i.e. the monomial t^(4r)."""

    r: Fraction

    def __post_init__(self) -> None:
        r = Fraction(self.r)
        if (4 * r).denominator != 1:
            raise ValueError(f"q^{r} is not representable: 4*{r} is not an integer")
        object.__setattr__(self, "r", r)

    @property
    def t_exponent(self) -> int:
        return int(4 * self.r)


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class PowInt(Expr):
    base: Expr
    exponent: int

    def __post_init__(self) -> None:
        if not isinstance(self.exponent, int):
            raise ValueError("power exponent must be an integer")


@dataclass(frozen=True)
class Sqrt(Expr):
    arg: Expr


# ----------------------------------------------------------------------
# tokenizer

_SYMBOLS = "+-*/^(){},="
_KEYWORDS = ("Pi", "psi", "phi", "sqrt", "q")


@dataclass(frozen=True)
class _Token:
    kind: str       # 'int' | 'name' | one of _SYMBOLS | 'end'
    text: str
    pos: int        # character position; converted to bytes when reporting


def _byte_offset(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if "0" <= ch <= "9":
            j = i
            while j < n and "0" <= text[j] <= "9":
                j += 1
            tokens.append(_Token("int", text[i:j], i))
            i = j
            continue
        if ("a" <= ch <= "z") or ("A" <= ch <= "Z"):
            j = i
            while j < n and (("a" <= text[j] <= "z") or ("A" <= text[j] <= "Z")):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", _byte_offset(text, i))
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    # -- plumbing ------------------------------------------------------

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _offset(self, token: _Token | None = None) -> int:
        return _byte_offset(self.text, (token or self.current).pos)

    def _advance(self) -> _Token:
        tok = self.current
        self.pos += 1
        return tok

    def _accept(self, kind: str) -> _Token | None:
        if self.current.kind == kind:
            return self._advance()
        return None

    def _expect(self, kind: str, expected: frozenset[str]) -> _Token:
        if self.current.kind != kind:
            raise ParseError(
                f"unexpected {self._describe(self.current)}", self._offset(), expected
            )
        return self._advance()

    @staticmethod
    def _describe(tok: _Token) -> str:
        if tok.kind == "end":
            return "end of input"
        return f"token {tok.text!r}"

    # -- grammar -------------------------------------------------------

    def parse(self) -> Expr:
        e = self.expr()
        if self.current.kind != "end":
            raise ParseError(
                f"unexpected {self._describe(self.current)}",
                self._offset(),
                frozenset({"end of input", "'+'", "'-'", "'*'", "'/'"}),
            )
        return e

    def expr(self) -> Expr:
        node = self.term()
        while self.current.kind in ("+", "-"):
            op = self._advance().kind
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.current.kind in ("*", "/"):
            op = self._advance().kind
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> Expr:
        node = self.atom()
        if self._accept("^"):
            tok = self._expect("int", frozenset({"integer"}))
            node = PowInt(node, int(tok.text))
        return node

    def atom(self) -> Expr:
        tok = self.current
        if tok.kind == "int":
            return Const(self._rational())
        if tok.kind == "(":
            self._advance()
            inner = self.expr()
            self._expect(")", frozenset({"')'"}))
            return inner
        if tok.kind == "name":
            if tok.text in ("Pi", "psi", "phi"):
                return self._builder_call(tok.text)
            if tok.text == "sqrt":
                return self._sqrt_call()
            if tok.text == "q":
                return self._qpower()
            raise ParseError(
                f"unknown name {tok.text!r}",
                self._offset(),
                frozenset({"'Pi'", "'psi'", "'phi'", "'sqrt'", "'q'"}),
            )
        raise ParseError(
            f"unexpected {self._describe(tok)}",
            self._offset(),
            frozenset({"'Pi'", "'psi'", "'phi'", "'sqrt'", "'q'", "integer", "'('"}),
        )

    def _rational(self) -> Fraction:
        tok = self._expect("int", frozenset({"integer"}))
        value = Fraction(int(tok.text))
        # consume '/' only when an integer follows, so 3/psi(q) stays a term
        if self.current.kind == "/" and self.tokens[self.pos + 1].kind == "int":
            self._advance()
            den_tok = self._advance()
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("rational with zero denominator", self._offset(den_tok))
            value /= den
        return value

    def _builder_call(self, name: str) -> Expr:
        self._advance()  # name
        self._expect("(", frozenset({"'('"}))
        if self.current.kind == ")":
            raise ArityError(f"{name} requires exactly one argument", self._offset())
        k = self._qarg(name)
        if self.current.kind == ",":
            raise ArityError(f"{name} takes exactly one argument", self._offset())
        self._expect(")", frozenset({"')'"}))
        return {"Pi": Pi, "psi": Psi, "phi": Phi}[name](k)

    def _qarg(self, name: str) -> int:
        tok = self._expect("name", frozenset({"'q'"}))
        if tok.text != "q":
            raise ParseError(
                f"{name} argument must be a power of q", self._offset(tok), frozenset({"'q'"})
            )
        if self._accept("^"):
            num = self._expect("int", frozenset({"integer"}))
            k = int(num.text)
            if k < 1:
                raise ParseError("builder power must be positive", self._offset(num))
            return k
        return 1

    def _sqrt_call(self) -> Expr:
        self._advance()  # sqrt
        self._expect("(", frozenset({"'('"}))
        if self.current.kind == ")":
            raise ArityError("sqrt requires exactly one argument", self._offset())
        inner = self.expr()
        if self.current.kind == ",":
            raise ArityError("sqrt takes exactly one argument", self._offset())
        self._expect(")", frozenset({"')'"}))
        return Sqrt(inner)

    def _qpower(self) -> Expr:
        self._advance()  # q
        self._expect("^", frozenset({"'^'"}))
        braced = self._accept("{") is not None
        rat_tok = self.current
        r = self._rational()
        if braced:
            self._expect("}", frozenset({"'}'"}))
        if (4 * r).denominator != 1:
            raise QPowNotQuarterIntegral(r, self._offset(rat_tok))
        return QPow(r)


def parse(text: str) -> Expr:
    """Parse DSL text into an expression tree."""
    return _Parser(text).parse()


# ----------------------------------------------------------------------
# printer

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4


def _level(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _LEVEL_ADD
    if isinstance(e, (Mul, Div)):
        return _LEVEL_MUL
    if isinstance(e, PowInt):
        return _LEVEL_POW
    return _LEVEL_ATOM


def _render(e: Expr, min_level: int) -> str:
    text = _render_raw(e)
    if _level(e) < min_level:
        return f"({text})"
    return text


def _render_raw(e: Expr) -> str:
    if isinstance(e, Pi):
        return "Pi(q)" if e.k == 1 else f"Pi(q^{e.k})"
    if isinstance(e, Psi):
        return "psi(q)" if e.k == 1 else f"psi(q^{e.k})"
    if isinstance(e, Phi):
        return "phi(q)" if e.k == 1 else f"phi(q^{e.k})"
    if isinstance(e, QPow):
        return f"q^{e.r}"
    if isinstance(e, Const):
        return str(e.value)
    if isinstance(e, Add):
        return f"{_render(e.left, _LEVEL_ADD)} + {_render(e.right, _LEVEL_ADD + 1)}"
    if isinstance(e, Sub):
        return f"{_render(e.left, _LEVEL_ADD)} - {_render(e.right, _LEVEL_ADD + 1)}"
    if isinstance(e, Mul):
        return f"{_render(e.left, _LEVEL_MUL)} * {_render(e.right, _LEVEL_MUL + 1)}"
    if isinstance(e, Div):
        return f"{_render(e.left, _LEVEL_MUL)} / {_render(e.right, _LEVEL_MUL + 1)}"
    if isinstance(e, PowInt):
        return f"{_render(e.base, _LEVEL_ATOM)}^{e.exponent}"
    if isinstance(e, Sqrt):
        return f"sqrt({_render(e.arg, _LEVEL_ADD)})"
    raise TypeError(f"not an expression node: {e!r}")


def to_text(e: Expr) -> str:
    """Render an expression tree in the DSL grammar; inverse of :func:`parse`."""
    return _render(e, _LEVEL_ADD)
