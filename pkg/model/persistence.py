import os
import json
import logging
import tempfile
from collections import OrderedDict

import utils
from core.errors import CorruptStore
from data.text_analysis import PosTag, EntityTag
from model.deep_case import DeepCase
from model.network import Network, WordNode, KnowledgeEntry, pair

logger = logging.getLogger('base')


def to_document(net):
    """
    Store document of a network: header, then words, knowledge and links sorted by
    id, keys in a fixed order.
    """
    stats = net.stats()
    doc = OrderedDict()
    doc['header'] = OrderedDict([
        ('magic', utils.STORE_MAGIC),
        ('format_version', utils.STORE_VERSION),
        ('word_count', stats.words),
        ('knowledge_count', stats.knowledge_units),
        ('link_count', stats.links),
    ])
    doc['words'] = [OrderedDict([
        ('id', w.id),
        ('display', w.display_surface),
        ('canonical', w.surface_canonical),
        ('pos', w.pos.value if w.pos is not None else None),
        ('entity', w.entity.value),
    ]) for _, w in sorted(net.words.items())]
    doc['knowledge'] = [OrderedDict([
        ('id', k.id),
        ('text', k.text),
        ('source', k.source),
        ('word_ids', list(k.word_ids)),
        ('cases', [k.cases[w].value for w in k.word_ids]),
    ]) for _, k in sorted(net.knowledge.items())]
    doc['links'] = [OrderedDict([
        ('a', link.a),
        ('b', link.b),
        ('knowledge_ids', sorted(link.knowledge_ids)),
    ]) for _, link in sorted(net.links.items())]
    return doc


def dumps(net):
    return json.dumps(to_document(net), indent=2, ensure_ascii=False) + '\n'


def save(net, path):
    """
    Writes the network to path (temp file + replace, so a failed save keeps the old store)
    """
    payload = dumps(net)
    dir_path = os.path.dirname(os.path.abspath(path))
    os.makedirs(dir_path, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(suffix='.tmp', prefix='store_', dir=dir_path)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(payload)
        os.replace(tmp_path, path)
    except Exception:
        try:
            os.unlink(tmp_path)
        except OSError:
            pass
        raise
    logger.info('Network saved in [{:s}] ...'.format(path))


def _field(record, key, kind, what):
    try:
        value = record[key]
    except (KeyError, TypeError):
        raise CorruptStore('{} record without "{}"'.format(what, key)) from None
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise CorruptStore('{} record: bad "{}" value {!r}'.format(what, key, value))
    return value


def _enum(enum, value, what):
    try:
        return enum(value) if enum is not DeepCase else DeepCase.parse(value)
    except (ValueError, AttributeError):
        raise CorruptStore('{}: unknown value {!r}'.format(what, value)) from None


def from_document(doc):
    """
    Rebuilds a network from a store document, checking header, counts and references
    """
    if not isinstance(doc, dict):
        raise CorruptStore('store is not a JSON object')
    header = doc.get('header')
    if not isinstance(header, dict) or header.get('magic') != utils.STORE_MAGIC:
        raise CorruptStore('bad magic')
    if header.get('format_version') != utils.STORE_VERSION:
        raise CorruptStore('unsupported format version: {}'.format(header.get('format_version')))
    words, knowledge, links = doc.get('words'), doc.get('knowledge'), doc.get('links')
    if not all(isinstance(x, list) for x in (words, knowledge, links)):
        raise CorruptStore('missing words, knowledge or links array')
    for name, records in (('word_count', words), ('knowledge_count', knowledge), ('link_count', links)):
        if header.get(name) != len(records):
            raise CorruptStore('{} mismatch: header says {}, body has {}'.format(
                name, header.get(name), len(records)))

    net = Network()
    for expected_id, record in enumerate(words, start=1):
        word_id = _field(record, 'id', int, 'word')
        if word_id != expected_id:
            raise CorruptStore('word ids are not contiguous at id {}'.format(word_id))
        canonical = _field(record, 'canonical', str, 'word')
        if not canonical or canonical in net.word_index:
            raise CorruptStore('duplicate or empty word surface: {!r}'.format(canonical))
        pos = record.get('pos')
        net.words[word_id] = WordNode(
            word_id,
            canonical,
            _field(record, 'display', str, 'word'),
            _enum(PosTag, pos, 'word pos') if pos is not None else None,
            _enum(EntityTag, record.get('entity'), 'word entity'),
        )
        net.word_index[canonical] = word_id
        net.adjacency[word_id] = {}
        net.word_knowledge[word_id] = set()

    for expected_id, record in enumerate(knowledge, start=1):
        knowledge_id = _field(record, 'id', int, 'knowledge')
        if knowledge_id != expected_id:
            raise CorruptStore('knowledge ids are not contiguous at id {}'.format(knowledge_id))
        word_ids = _field(record, 'word_ids', list, 'knowledge')
        case_names = _field(record, 'cases', list, 'knowledge')
        if not word_ids or len(set(word_ids)) != len(word_ids) or len(case_names) != len(word_ids):
            raise CorruptStore('K{}: bad word_ids/cases'.format(knowledge_id))
        for word_id in word_ids:
            if word_id not in net.words:
                raise CorruptStore('K{} references missing word id {}'.format(knowledge_id, word_id))
        cases = {w: _enum(DeepCase, c, 'K{} case'.format(knowledge_id)) for w, c in zip(word_ids, case_names)}
        net._store_entry(KnowledgeEntry(
            knowledge_id,
            _field(record, 'text', str, 'knowledge'),
            list(word_ids),
            cases,
            _field(record, 'source', str, 'knowledge'),
        ))

    for record in links:
        a, b = _field(record, 'a', int, 'link'), _field(record, 'b', int, 'link')
        for word_id in (a, b):
            if word_id not in net.words:
                raise CorruptStore('link references missing word id {}'.format(word_id))
        if a >= b:
            raise CorruptStore('link ({}, {}) is not stored as a < b'.format(a, b))
        knowledge_ids = _field(record, 'knowledge_ids', list, 'link')
        if not knowledge_ids:
            raise CorruptStore('link ({}, {}) has no knowledge id'.format(a, b))
        for knowledge_id in knowledge_ids:
            entry = net.knowledge.get(knowledge_id)
            if entry is None:
                raise CorruptStore('link ({}, {}) references missing knowledge id {}'.format(a, b, knowledge_id))
            if a not in entry.cases or b not in entry.cases:
                raise CorruptStore('link ({}, {}) is not backed by K{}'.format(a, b, knowledge_id))
            net._link(a, b, knowledge_id)

    if len(net.links) != len(links):
        raise CorruptStore('duplicate link records')
    # every pair of every unit must be linked
    expected = sum(len(k.word_ids) * (len(k.word_ids) - 1) // 2 for k in net.knowledge.values())
    if net.stats().total_weight != expected:
        raise CorruptStore('link memberships do not match knowledge units ({} != {})'.format(
            net.stats().total_weight, expected))
    return net


def load(path):
    """
    Loads a network saved with save(). OSError for unreadable files, CorruptStore for
    anything that is not a valid store.
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise CorruptStore('{}: not a UTF-8 store ({})'.format(path, e)) from None
    try:
        doc = json.loads(text, object_pairs_hook=OrderedDict)
    except json.JSONDecodeError as e:
        raise CorruptStore('{}: not a valid store ({})'.format(path, e)) from None
    net = from_document(doc)
    logger.info('Network loaded from [{:s}]: {}'.format(path, net.stats()))
    return net
