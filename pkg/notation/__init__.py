from .lexer import (
    Token,
    tokenize,
)
from .parser import (
    Parser,
    parse_cf,
    parse_quad,
)
from .render import (
    render_cf,
    render_quad,
    render_equation,
)
