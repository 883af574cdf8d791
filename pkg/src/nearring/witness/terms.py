"""
Derivation terms over {0, +, -, o} and generator leaves, used as membership certificates.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from pyparsing import (
    Forward,
    Group,
    Keyword,
    ParseException,
    Regex,
    Suppress,
    ZeroOrMore,
    one_of,
)

from nearring.algebra.polycore import IntPoly, add, compose, sub
from nearring.utils.logging import IllFormedTermError, TermSyntaxError, UnresolvedLabelError


logger = logging.getLogger(__name__)


# eq=False: nodes compare and hash by identity so shared subterms stay cheap


@dataclass(frozen=True, eq=False)
class Zero:
    pass


@dataclass(frozen=True, eq=False)
class Gen:
    index: int


@dataclass(frozen=True, eq=False)
class IdentityLeaf:
    pass


@dataclass(frozen=True, eq=False)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, eq=False)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True, eq=False)
class Compose:
    left: "Term"
    right: "Term"


Term = Union[Zero, Gen, IdentityLeaf, Add, Sub, Compose]
Binary = (Add, Sub, Compose)


class Environment(NamedTuple):
    """Assignment of generator leaves; has_identity admits the leaf for x."""
    generators: Tuple[IntPoly, ...]
    has_identity: bool = False

    @classmethod
    def of(cls, *generators: IntPoly, has_identity: bool = False) -> "Environment":
        return cls(tuple(generators), has_identity)


class Derivation(NamedTuple):
    """A named term together with the value it claims to evaluate to."""
    name: str
    term: Term
    environment: Environment
    claimed_value: IntPoly


def _children(t: Term) -> Sequence[Term]:
    if isinstance(t, Binary):
        return (t.left, t.right)  # type: ignore[union-attr]
    return ()


def eval_term(t: Term, env: Environment) -> IntPoly:
    """
    Evaluate t with polynomial arithmetic, sharing work across repeated subterms.

    Args:
        t: Term to evaluate
        env: Generator assignment

    Returns:
        The polynomial the term denotes

    Raises:
        UnresolvedLabelError: If a leaf has no value in env
    """
    values: Dict[int, IntPoly] = {}
    stack: List[Tuple[Term, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in values:
            continue
        children = _children(node)
        if children and not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in children if id(child) not in values)
            continue
        values[id(node)] = _eval_node(node, env, values)

    return values[id(t)]


def _eval_node(node: Term, env: Environment, values: Dict[int, IntPoly]) -> IntPoly:
    if isinstance(node, Zero):
        return IntPoly.zero()
    if isinstance(node, Gen):
        if not 0 <= node.index < len(env.generators):
            raise UnresolvedLabelError(
                f"Leaf g{node.index} is outside an environment of {len(env.generators)} generator(s)"
            )
        return env.generators[node.index]
    if isinstance(node, IdentityLeaf):
        if not env.has_identity:
            raise UnresolvedLabelError("Leaf id used in an environment without a left identity")
        return IntPoly.identity()

    left, right = values[id(node.left)], values[id(node.right)]
    if isinstance(node, Add):
        return add(left, right)
    if isinstance(node, Sub):
        return sub(left, right)
    return compose(left, right)


def verify_derivation(d: Derivation) -> bool:
    """Whether the term evaluates exactly to the claimed value."""
    value = eval_term(d.term, d.environment)
    if value != d.claimed_value:
        logger.debug(f"Derivation {d.name} evaluates to {value}, claimed {d.claimed_value}")
        return False
    return True


def times(n: int, t: Term) -> Term:
    """The term n * t, built by doubling with shared subterms."""
    if n < 0:
        return Sub(Zero(), times(-n, t))
    result: Term = Zero()
    started = False
    power = t
    while n:
        if n & 1:
            result = Add(result, power) if started else power
            started = True
        n >>= 1
        if n:
            power = Add(power, power)
    return result


def sum_terms(terms: Sequence[Term]) -> Term:
    """Balanced sum of terms; Zero when empty."""
    if not terms:
        return Zero()
    if len(terms) == 1:
        return terms[0]
    middle = len(terms) // 2
    return Add(sum_terms(terms[:middle]), sum_terms(terms[middle:]))


def lift_witness(t: Term, cancellable: int = 0) -> Term:
    """
    Lift a term over {X, Y_j} to one over {X, Y_j, Z}.

    X is the leaf Gen(cancellable), Z the identity leaf. The lifted term
    R(t) satisfies eval(R(t)) o a = eval(t) whenever X evaluates to a
    right cancellable a and every other leaf to a constant.

    R(X) = Z, R(Y_j) = Y_j, R(0) = 0, R distributes over + and -, and
    R(T1 o T2) = T1 o R(T2).

    Raises:
        IllFormedTermError: If t already contains the identity leaf
    """
    lifted: Dict[int, Term] = {}
    stack: List[Tuple[Term, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in lifted:
            continue
        if isinstance(node, IdentityLeaf):
            raise IllFormedTermError("Cannot lift a term that already contains the identity leaf")
        if isinstance(node, (Add, Sub)) and not expanded:
            stack.append((node, True))
            stack.extend([(node.left, False), (node.right, False)])
            continue
        if isinstance(node, Compose) and not expanded:
            stack.append((node, True))
            stack.append((node.right, False))
            _reject_identity(node.left)
            continue

        if isinstance(node, Gen):
            lifted[id(node)] = IdentityLeaf() if node.index == cancellable else node
        elif isinstance(node, Zero):
            lifted[id(node)] = node
        elif isinstance(node, Add):
            lifted[id(node)] = Add(lifted[id(node.left)], lifted[id(node.right)])
        elif isinstance(node, Sub):
            lifted[id(node)] = Sub(lifted[id(node.left)], lifted[id(node.right)])
        elif isinstance(node, Compose):
            lifted[id(node)] = Compose(node.left, lifted[id(node.right)])

    return lifted[id(t)]


def lift_round_trip(d: Derivation, cancellable: int = 0) -> bool:
    """
    Whether eval(R(t)) o a == eval(t) for the derivation's own environment.

    a is the generator at index cancellable; the identity leaf is bound to x.
    The law is only promised when every other generator is constant.
    """
    a = d.environment.generators[cancellable]
    lifted = lift_witness(d.term, cancellable)
    env = Environment(d.environment.generators, has_identity=True)
    return compose(eval_term(lifted, env), a) == eval_term(d.term, d.environment)


def _reject_identity(t: Term) -> None:
    seen = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, IdentityLeaf):
            raise IllFormedTermError("Cannot lift a term that already contains the identity leaf")
        stack.extend(_children(node))


_OPERATORS = {"add": Add, "sub": Sub, "comp": Compose}
_OPERATOR_NAMES = {Add: "add", Sub: "sub", Compose: "comp"}

# trees larger than this render with named shared subterms
EXPAND_LIMIT = 10_000


def expanded_size(t: Term) -> int:
    """Node count of t written out as a tree, repeated subterms counted every time."""
    sizes: Dict[int, int] = {}
    stack: List[Tuple[Term, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in sizes:
            continue
        children = _children(node)
        if children and not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in children if id(child) not in sizes)
            continue
        sizes[id(node)] = 1 + sum(sizes[id(child)] for child in children)

    return sizes[id(t)]


def _leaf_text(node: Term) -> str:
    if isinstance(node, Zero):
        return "zero"
    if isinstance(node, Gen):
        return f"g{node.index}"
    return "id"


def render_term(t: Term, shared: Optional[bool] = None) -> str:
    """
    S-expression text, e.g. "(sub (comp g0 g1) g0)".

    The shared form binds every operator node once,
    "(let ((t0 (add g0 g0)) (t1 (comp g0 t0))) t1)", so its length follows
    the number of distinct nodes rather than the expanded tree.

    Args:
        t: Term to render
        shared: Force the shared form on or off; by default it is used
            when the expanded tree exceeds EXPAND_LIMIT nodes
    """
    if shared is None:
        shared = expanded_size(t) > EXPAND_LIMIT
    if shared:
        return _render_shared(t)

    rendered: Dict[int, str] = {}
    stack: List[Tuple[Term, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in rendered:
            continue
        children = _children(node)
        if not children:
            rendered[id(node)] = _leaf_text(node)
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in children)
            continue
        left, right = children
        name = _OPERATOR_NAMES[type(node)]
        rendered[id(node)] = f"({name} {rendered[id(left)]} {rendered[id(right)]})"

    return rendered[id(t)]


def _render_shared(t: Term) -> str:
    names: Dict[int, str] = {}
    bindings: List[str] = []
    stack: List[Tuple[Term, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in names:
            continue
        children = _children(node)
        if not children:
            names[id(node)] = _leaf_text(node)
            continue
        if not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in children if id(child) not in names)
            continue
        left, right = children
        name = f"t{len(bindings)}"
        operator = _OPERATOR_NAMES[type(node)]
        bindings.append(f"({name} ({operator} {names[id(left)]} {names[id(right)]}))")
        names[id(node)] = name

    return f"(let ({' '.join(bindings)}) {names[id(t)]})"


@dataclass(frozen=True, eq=False)
class _Ref:
    name: str


@dataclass(frozen=True, eq=False)
class _Let:
    bindings: Tuple[Tuple[str, Any], ...]
    body: Any


def _resolve(t: Any, scope: Dict[str, Term]) -> Term:
    """Replace name references by the terms bound to them."""
    resolved: Dict[int, Term] = {}
    stack: List[Tuple[Any, bool]] = [(t, False)]

    while stack:
        node, expanded = stack.pop()
        if id(node) in resolved:
            continue
        if isinstance(node, _Ref):
            if node.name not in scope:
                raise TermSyntaxError(f"name {node.name} is not bound")
            resolved[id(node)] = scope[node.name]
            continue
        children = _children(node)
        if children and not expanded:
            stack.append((node, True))
            stack.extend((child, False) for child in children if id(child) not in resolved)
            continue
        if not children:
            resolved[id(node)] = node
            continue
        left, right = resolved[id(node.left)], resolved[id(node.right)]
        if left is node.left and right is node.right:
            resolved[id(node)] = node
        else:
            resolved[id(node)] = type(node)(left, right)

    return resolved[id(t)]


class TermParser:
    """pyparsing grammar for the s-expression term syntax, plain or shared."""

    def __init__(self) -> None:
        generator = Regex(r"g\d+")
        generator.set_parse_action(lambda t: Gen(int(t[0][1:])))
        identity = Keyword("id")
        identity.set_parse_action(lambda t: IdentityLeaf())
        zero = Keyword("zero")
        zero.set_parse_action(lambda t: Zero())
        name = Regex(r"t\d+")
        reference = name.copy()
        reference.set_parse_action(lambda t: _Ref(t[0]))

        self.term = Forward()
        operator = one_of(list(_OPERATORS), as_keyword=True)
        node = Group(Suppress("(") + operator + self.term + self.term + Suppress(")"))
        node.set_parse_action(lambda t: _OPERATORS[t[0][0]](t[0][1], t[0][2]))
        self.term <<= generator | identity | zero | reference | node

        binding = Group(Suppress("(") + name + self.term + Suppress(")"))
        bindings = Group(Suppress("(") + ZeroOrMore(binding) + Suppress(")"))
        let = Suppress("(") + Keyword("let").suppress() + bindings + self.term + Suppress(")")
        let.set_parse_action(lambda t: _Let(tuple((b[0], b[1]) for b in t[0]), t[1]))
        self.document = let | self.term

    def parse(self, text: str) -> Term:
        try:
            parsed = self.document.parse_string(text, parse_all=True)[0]
        except ParseException as e:
            raise TermSyntaxError(f"cannot parse term at position {e.loc}: {e.msg}")

        if not isinstance(parsed, _Let):
            return _resolve(parsed, {})
        scope: Dict[str, Term] = {}
        for name, body in parsed.bindings:
            if name in scope:
                raise TermSyntaxError(f"name {name} is bound twice")
            scope[name] = _resolve(body, scope)
        return _resolve(parsed.body, scope)


_parser = TermParser()


def parse_term(text: str) -> Term:
    """
    Parse s-expression term text, plain or in the shared "let" form.

    Raises:
        TermSyntaxError: If the text is not a term or uses an unbound name
    """
    return _parser.parse(text)
