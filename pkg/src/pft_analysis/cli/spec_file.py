"""Reading and writing shift-spec documents.

A spec document is YAML with three keys::

    alphabet: ['0', '1']     # optional, binary by default
    period: 2
    forbidden:               # one list of words per phase
    - ['11']
    - []

Words are strings of glyphs. The document is read through the YAML node
tree rather than ``safe_load`` so that a word such as ``0011`` stays a
string instead of turning into a number, and so that every error can name
its line and column.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import yaml

from ..core.spec import PftSpec
from ..core.words import Alphabet
from ..errors import SpecFileError

logger = logging.getLogger(__name__)

KEYS = ('alphabet', 'period', 'forbidden')
NULL_TAG = 'tag:yaml.org,2002:null'


def _error(message: str, node: Optional[yaml.Node] = None) -> SpecFileError:
    if node is None:
        return SpecFileError(message)
    mark = node.start_mark
    return SpecFileError(message, mark.line + 1, mark.column + 1)


def _scalar(node: yaml.Node, what: str) -> str:
    if not isinstance(node, yaml.ScalarNode):
        raise _error(f"{what} must be a scalar", node)
    return node.value


def _sequence(node: yaml.Node, what: str) -> List[yaml.Node]:
    if not isinstance(node, yaml.SequenceNode):
        raise _error(f"{what} must be a list", node)
    return node.value


def _parse_alphabet(node: Optional[yaml.Node]) -> Alphabet:
    if node is None:
        return Alphabet.binary()
    glyphs = [_scalar(item, "alphabet glyph") for item in _sequence(node, "alphabet")]
    try:
        return Alphabet.from_symbols(glyphs)
    except ValueError as e:
        raise _error(str(e), node)


def _parse_period(node: Optional[yaml.Node], root: yaml.Node) -> int:
    if node is None:
        raise _error("missing key 'period'", root)
    text = _scalar(node, "period")
    if not text.isdigit() or int(text) < 1:
        raise _error(f"period must be a positive integer, got {text!r}", node)
    return int(text)


def parse_spec_document(text: str) -> PftSpec:
    """Parse a spec document.

    Raises:
        SpecFileError: With the 1-based line and column of the offending node
    """
    try:
        root = yaml.compose(text)
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        problem = getattr(e, 'problem', None) or str(e)
        if mark is not None:
            raise SpecFileError(problem, mark.line + 1, mark.column + 1)
        raise SpecFileError(problem)
    if root is None:
        raise SpecFileError("empty document")
    if not isinstance(root, yaml.MappingNode):
        raise _error("document must be a mapping", root)

    fields = {}
    for key_node, value_node in root.value:
        key = _scalar(key_node, "key")
        if key not in KEYS:
            raise _error(f"unknown key {key!r}", key_node)
        if key in fields:
            raise _error(f"duplicate key {key!r}", key_node)
        fields[key] = value_node

    alphabet = _parse_alphabet(fields.get('alphabet'))
    period = _parse_period(fields.get('period'), root)
    if 'forbidden' not in fields:
        raise _error("missing key 'forbidden'", root)
    phases = _sequence(fields['forbidden'], "forbidden")
    if len(phases) != period:
        raise _error(f"forbidden has {len(phases)} phases, expected {period}", fields['forbidden'])

    schedule = []
    for j, phase_node in enumerate(phases):
        words = set()
        if isinstance(phase_node, yaml.ScalarNode) and phase_node.tag == NULL_TAG:
            schedule.append(frozenset())
            continue
        for word_node in _sequence(phase_node, f"phase {j}"):
            glyphs = _scalar(word_node, "word")
            if not glyphs:
                raise _error(f"empty word in phase {j}", word_node)
            try:
                words.add(alphabet.parse_word(glyphs))
            except ValueError as e:
                raise _error(str(e), word_node)
        schedule.append(frozenset(words))
    return PftSpec(alphabet, period, tuple(schedule))


def load_spec_file(path: Union[str, Path]) -> PftSpec:
    """Read a spec document from disk."""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise SpecFileError(f"cannot read {path}: {e.strerror}")
    spec = parse_spec_document(text)
    logger.debug(f"Loaded {path}: {spec}")
    return spec


def format_spec_document(spec: PftSpec) -> str:
    """Canonical document: words sorted by length then radix code, block style."""
    data = {
        'alphabet': list(spec.alphabet.symbols),
        'period': spec.period,
        'forbidden': [[spec.alphabet.format_word(w) for w in spec.sorted_words(j)]
                      for j in range(spec.period)],
    }
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=False, allow_unicode=True)


def save_spec_file(spec: PftSpec, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_spec_document(spec), encoding='utf-8')


__all__ = [
    "parse_spec_document",
    "load_spec_file",
    "format_spec_document",
    "save_spec_file",
]
