import os
import re

ROOT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_DIR = os.path.join(ROOT_DIR, 'config')

DEFAULT_LEXICON = os.path.join(CONFIG_DIR, 'lexicon.tsv')
DEFAULT_GAZETTEER = os.path.join(CONFIG_DIR, 'gazetteer.tsv')
DEFAULT_STOPWORDS = os.path.join(CONFIG_DIR, 'stopwords.txt')
DEFAULT_INTERROGATIVES = os.path.join(CONFIG_DIR, 'interrogatives.tsv')
DEFAULT_MAX_HOPS = 3

STORE_MAGIC = 'DCQA'
STORE_VERSION = 1
STORE_SUFFIX = '.dcqa.json'
STORE_ENV = 'DCQA_STORE'

# exit codes
EXIT_OK = 0
EXIT_IO = 1
EXIT_EMPTY = 2
EXIT_NO_ANSWER = 3

__version__ = '1.0.0'


def canonical(surface):
    """
    Case-folded form used as interning key
    """
    return surface.casefold()


def canonical_text(text):
    """
    Knowledge dedup key: case-folded, single-spaced
    """
    return ' '.join(text.casefold().split())


def word_label(word_id):
    return 'ID{}'.format(word_id)


def knowledge_label(knowledge_id):
    return 'K{}'.format(knowledge_id)


def suffix_stems(word, suffixes=('es', 's', 'ed', 'd')):
    """
    Returns the set of forms a word may have once a regular suffix is stripped
    (the word itself included). Stems shorter than 3 letters are not produced.
    """
    stems = {word}
    for suffix in suffixes:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            stems.add(word[:-len(suffix)])
    return stems


def is_capitalized(surface):
    return bool(re.match(r'[^\W\d_]', surface)) and surface[0].isupper()
