'''ASCII syntax of formulas

```
(EXISTS x . phi)   (FORALL x . phi)   (NOT phi)
(AND phi ...)      (OR phi ...)       (x ~ y)      (x = y)
```

Variables are identifiers (`[A-Za-z_][A-Za-z0-9_]*`) other than the
keywords. `parse(render(f)) == f` for every formula.
'''
import logging
import re

from path import Path

from pebblebench.exception import MalformedFormulaError
from pebblebench.logic.formula import (Adjacent, And, Equal, Exists, Forall,
                                       Not, Or)

logger = logging.getLogger()

KEYWORDS = ('EXISTS', 'FORALL', 'NOT', 'AND', 'OR')
TOKEN = re.compile(r'\s*(?:([()~=.])|([A-Za-z_][A-Za-z0-9_]*))')


def render(f):
    '''Render `f` in the ASCII syntax'''
    if isinstance(f, Exists):
        return '(EXISTS {} . {})'.format(f.var, render(f.body))
    if isinstance(f, Forall):
        return '(FORALL {} . {})'.format(f.var, render(f.body))
    if isinstance(f, Not):
        return '(NOT {})'.format(render(f.body))
    if isinstance(f, (And, Or)):
        name = 'AND' if isinstance(f, And) else 'OR'
        return '({})'.format(' '.join([name] + [render(o)
                                                for o in f.operands]))
    if isinstance(f, Adjacent):
        return '({} ~ {})'.format(f.left, f.right)
    if isinstance(f, Equal):
        return '({} = {})'.format(f.left, f.right)
    msg = "Not a formula node: %r" % (f,)
    logger.error(msg)
    raise MalformedFormulaError(msg)


def tokenize(text):
    tokens = []
    position = 0
    text = text.rstrip()
    while position < len(text):
        match = TOKEN.match(text, position)
        if not match:
            msg = "Unexpected character '%s' at offset %d" % (
                text[position], position)
            logger.error(msg)
            raise MalformedFormulaError(msg)
        tokens.append(match.group(1) or match.group(2))
        position = match.end()
    return tokens


class _Parser():
    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    def fail(self, expected):
        found = self.tokens[self.index] if self.index < len(self.tokens) \
            else 'end of input'
        msg = "Expected %s, found '%s'" % (expected, found)
        logger.error(msg)
        raise MalformedFormulaError(msg)

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return None

    def take(self, expected=None):
        token = self.peek()
        if token is None or (expected is not None and token != expected):
            self.fail("'%s'" % expected if expected else 'a token')
        self.index += 1
        return token

    def variable(self):
        token = self.peek()
        if token is None or token in KEYWORDS or \
                not re.match(r'[A-Za-z_]', token):
            self.fail('a variable')
        self.index += 1
        return token

    def formula(self):
        self.take('(')
        head = self.peek()
        if head in ('EXISTS', 'FORALL'):
            self.take()
            var = self.variable()
            self.take('.')
            body = self.formula()
            node = Exists(var, body) if head == 'EXISTS' else \
                Forall(var, body)
        elif head == 'NOT':
            self.take()
            node = Not(self.formula())
        elif head in ('AND', 'OR'):
            self.take()
            operands = []
            while self.peek() == '(':
                operands.append(self.formula())
            node = And(tuple(operands)) if head == 'AND' else \
                Or(tuple(operands))
        else:
            left = self.variable()
            relation = self.peek()
            if relation not in ('~', '='):
                self.fail("'~' or '='")
            self.take()
            right = self.variable()
            node = Adjacent(left, right) if relation == '~' else \
                Equal(left, right)
        self.take(')')
        return node


def parse(text):
    '''Parse a formula written in the ASCII syntax

    Raises:
        MalformedFormulaError: Syntax error
    '''
    parser = _Parser(tokenize(text))
    node = parser.formula()
    if parser.peek() is not None:
        parser.fail('end of input')
    return node


def read_formula(filepath):
    filepath = Path(filepath)
    if not filepath.isfile():
        msg = "Formula file %s not found" % filepath
        logger.error(msg)
        raise MalformedFormulaError(msg)
    with filepath.open() as f:
        return parse(f.read())


def write_formula(f, filepath):
    with Path(filepath).open('w') as out:
        out.write(render(f) + '\n')
