"""Tiny arithmetic-expression reader shared by field and polynomial literals.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] NUMBER)?
    atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'

What NAME, NAME(...) and numbers evaluate to is decided by a *domain* object
with methods ``number(n)``, ``symbol(name)`` and ``call(name, value)``; the
resulting values are combined with ordinary Python operators.
"""
import re

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Reader:
    def __init__(self, text, domain):
        self.text = text
        self.domain = domain
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] not in ("op",):
            raise self.error(f"expected {value!r}", tok)
        return tok

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                try:
                    value = value / rhs
                except ZeroDivisionError:
                    raise self.error("division by zero", tok) from None
                except (TypeError, ValueError) as exc:
                    raise self.error(str(exc), tok) from None
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "num":
                raise self.error("exponent must be an integer", tok)
            try:
                return base ** (sign * int(tok[1]))
            except (ZeroDivisionError, ValueError, TypeError) as exc:
                raise self.error(f"bad power: {exc}", tok) from None
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return self.domain.number(int(val))
        if kind == "name":
            if self.peek()[0] == "op" and self.peek()[1] == "(":
                self.take()
                inner = self.expr()
                self.expect(")")
                try:
                    return self.domain.call(val, inner)
                except (ValueError, KeyError) as exc:
                    raise self.error(str(exc), tok) from None
            try:
                return self.domain.symbol(val)
            except KeyError:
                raise self.error(f"unknown symbol {val!r}", tok) from None
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {val!r}", tok)


def evaluate(text, domain):
    """Parse ``text`` and evaluate it in ``domain``."""
    if not text or not text.strip():
        raise ParseError("empty literal", text, 0)
    reader = _Reader(text, domain)
    value = reader.expr()
    if reader.peek()[0] != "end":
        raise reader.error(f"unexpected {reader.peek()[1]!r}")
    return value


def join_terms(terms):
    """Join signed term strings with ' + ' / ' - '."""
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def is_compound(s):
    """True when ``s`` is a sum at top level (needs brackets inside a product)."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and s[i - 1:i + 2] in (" + ", " - "):
            return True
    return False
