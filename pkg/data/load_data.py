import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Tuple

from data.text_analysis import PosTag, EntityTag

logger = logging.getLogger('base')


@dataclass(frozen=True)
class Resources:
    """
    Read-only language resources shared by learning and question analysis
    """
    lexicon: Dict[str, PosTag] = field(default_factory=dict)
    gazetteer: Dict[str, EntityTag] = field(default_factory=dict)
    stopwords: FrozenSet[str] = frozenset()
    interrogatives: Dict[str, Tuple] = field(default_factory=dict)


def iter_entries(path):
    """
    Yields the (key, value) pairs of a `word<TAB>tag` file, skipping blank lines
    and '#' comments. A line without a tab yields (key, None).
    """
    with open(path, 'r', encoding='utf-8') as f:
        for n, line in enumerate(f, start=1):
            line = line.split('#')[0].rstrip('\n').strip()
            if not line:
                continue
            parts = line.split('\t')
            key = parts[0].strip()
            value = parts[1].strip() if len(parts) > 1 else None
            yield n, key, value


def load_table(path, parse):
    """
    Loads a `word<TAB>tag` file into a dict keyed by the lower-cased word.
    Inputs:
        path: file path
        parse: callable turning the tag column into a value
    Output: dict
    """
    table = {}
    for n, key, value in iter_entries(path):
        if value is None:
            logger.warning('{}:{}: missing tag for "{}"'.format(path, n, key))
            continue
        try:
            table[key.lower()] = parse(value)
        except ValueError:
            logger.warning('{}:{}: unknown tag "{}"'.format(path, n, value))
    return table


def load_lexicon(path):
    return load_table(path, PosTag)


def load_gazetteer(path):
    return load_table(path, EntityTag)


def load_stopwords(path):
    return frozenset(key.lower() for _, key, _ in iter_entries(path))


def load_document(path):
    """
    Reads one UTF-8 plain text document. OSError when the file is not UTF-8.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()
    except UnicodeDecodeError as e:
        raise OSError('{}: not UTF-8 text ({})'.format(path, e)) from None
