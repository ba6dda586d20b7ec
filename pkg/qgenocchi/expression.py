"""Parser for the plain text format written with purplex.

Parses sums, products, quotients and integer powers of integers, q and X,
which is exactly what the plain renderer emits. Results are PolyX values;
loads_ratfn additionally requires that X does not occur.
"""

import purplex

from qgenocchi import exact, exceptions


def loads(string):
    """Parse a plain-format expression into a PolyX.

    Raises ParseError if parsing fails.
    """
    try:
        return _PARSER.parse(string)
    except purplex.exception.PurplexError as e:
        raise exceptions.ParseError(
            'Failed to parse expression: {}'.format(e)
        )


def loads_ratfn(string):
    """Parse a plain-format expression in q alone into a RatFn.

    Raises ParseError if parsing fails or the expression depends on X.
    """
    value = loads(string)
    if value.degree > 0:
        raise exceptions.ParseError(
            'Expression depends on X: {!r}'.format(string)
        )
    return value.coefficient(0)


class ExpressionLexer(purplex.Lexer):
    """Lexer for the plain expression format."""
    INTEGER = purplex.TokenDef(r'\d+')
    Q = purplex.TokenDef(r'q')
    X = purplex.TokenDef(r'X')

    PLUS = purplex.TokenDef(r'\+')
    MINUS = purplex.TokenDef(r'-')
    TIMES = purplex.TokenDef(r'\*')
    DIVIDE = purplex.TokenDef(r'/')
    POWER = purplex.TokenDef(r'\^')
    LPAREN = purplex.TokenDef(r'\(')
    RPAREN = purplex.TokenDef(r'\)')

    WHITESPACE = purplex.TokenDef(r'[\s\n]+', ignore=True)


class ExpressionParser(purplex.Parser):
    """Parser for the plain expression format."""

    # pylint: disable=C0111,R0201,W0613,R0913
    LEXER = ExpressionLexer
    START = 'e'
    PRECEDENCE = ()

    @purplex.attach('e : e PLUS t')
    def add(self, left, plus, right):
        return left + right

    @purplex.attach('e : e MINUS t')
    def sub(self, left, minus, right):
        return left - right

    @purplex.attach('e : t')
    @purplex.attach('t : u')
    @purplex.attach('u : p')
    @purplex.attach('p : a')
    def passthrough(self, child):
        return child

    @purplex.attach('t : t TIMES u')
    def mul(self, left, times, right):
        return left * right

    @purplex.attach('t : t DIVIDE u')
    def div(self, left, divide, right):
        if right.degree > 0:
            raise exceptions.ParseError('Cannot divide by an expression in X')
        try:
            return left * right.coefficient(0).inverse()
        except exceptions.DivisionByZeroError:
            raise exceptions.ParseError('Division by zero')

    @purplex.attach('u : MINUS u')
    def neg(self, minus, child):
        return -child

    @purplex.attach('p : a POWER INTEGER')
    def power(self, base, caret, exponent):
        return base ** int(exponent)

    @purplex.attach('a : INTEGER')
    def number(self, num):
        return exact.PolyX.constant(int(num))

    @purplex.attach('a : Q')
    def q(self, t):
        return exact.PolyX.constant(exact.RatFn.q_power(1))

    @purplex.attach('a : X')
    def x(self, t):
        return exact.PolyX.monomial(1)

    @purplex.attach('a : LPAREN e RPAREN')
    def group(self, lparen, child, rparen):
        return child


# instantiate the parser at module-load time for better performance
_PARSER = ExpressionParser()
