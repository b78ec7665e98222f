import logging
from collections import namedtuple
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

import numpy as np

import utils
from core.errors import EmptyUnit, UnknownWord
from data.text_analysis import PosTag, EntityTag

logger = logging.getLogger('base')

NetworkStats = namedtuple('NetworkStats', ['words', 'knowledge_units', 'links', 'total_weight'])


@dataclass
class WordNode:
    id: int
    surface_canonical: str
    display_surface: str
    pos: Optional[PosTag] = None
    entity: EntityTag = EntityTag.NONE


@dataclass
class KnowledgeEntry:
    id: int
    text: str
    word_ids: List[int]
    cases: Dict[int, object]
    source: str = ''


@dataclass
class Link:
    a: int
    b: int
    knowledge_ids: Set[int] = field(default_factory=set)

    @property
    def weight(self):
        return len(self.knowledge_ids)

    def other(self, word_id):
        return self.b if word_id == self.a else self.a


def pair(u, v):
    return (u, v) if u < v else (v, u)


class Network:
    """
    Associative word network: interned word nodes, knowledge entries and unordered
    word-pair links labelled with the knowledge ids relating them.

    Ingestion needs exclusive access; any number of readers may query a network
    that is not being mutated.
    """

    def __init__(self):
        self.words = {}
        self.word_index = {}
        self.knowledge = {}
        self.links = {}
        self.adjacency = {}
        self.word_knowledge = {}
        self.knowledge_index = {}

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return (self.words == other.words and self.knowledge == other.knowledge
                and self.links == other.links)

    # learning
    def intern_word(self, surface, pos=None, entity=EntityTag.NONE):
        """
        Returns the id of the word, allocating the next one for an unseen surface.
        POS and entity of a known word are only upgraded from weaker information.
        """
        key = utils.canonical(surface)
        word_id = self.word_index.get(key)
        if word_id is None:
            word_id = len(self.words) + 1
            self.words[word_id] = WordNode(word_id, key, surface, pos, entity or EntityTag.NONE)
            self.word_index[key] = word_id
            self.adjacency[word_id] = {}
            self.word_knowledge[word_id] = set()
            return word_id
        node = self.words[word_id]
        if node.entity == EntityTag.NONE and entity not in (None, EntityTag.NONE):
            node.entity = entity
        if node.pos in (None, PosTag.OTHER) and pos not in (None, PosTag.OTHER):
            node.pos = pos
        return word_id

    def _link(self, u, v, knowledge_id):
        a, b = pair(u, v)
        link = self.links.get((a, b))
        if link is None:
            link = Link(a, b)
            self.links[(a, b)] = link
            self.adjacency[a][b] = link
            self.adjacency[b][a] = link
        link.knowledge_ids.add(knowledge_id)
        return link

    def _store_entry(self, entry):
        self.knowledge[entry.id] = entry
        self.knowledge_index[(entry.source, utils.canonical_text(entry.text))] = entry.id
        for word_id in entry.word_ids:
            self.word_knowledge[word_id].add(entry.id)

    def add_knowledge_unit(self, draft, assignments, source=''):
        """
        Stores a knowledge unit and links every pair of its member words.

        Args:
            draft (KnowledgeUnitDraft): unit text and tokens
            assignments (list): CaseAssignment for each content word
            source (str): document identifier

        Returns:
            int: the knowledge id (the existing one for an already known unit text)
        """
        if not assignments:
            raise EmptyUnit("no content words in: {}".format(draft.text))
        existing = self.knowledge_index.get((source, utils.canonical_text(draft.text)))
        if existing is not None:
            return existing

        knowledge_id = len(self.knowledge) + 1
        word_ids = []
        cases = {}
        for assignment in assignments:
            token = assignment.token
            word_id = self.intern_word(token.surface, token.pos, token.entity)
            if word_id not in cases:
                word_ids.append(word_id)
                cases[word_id] = assignment.case
        self._store_entry(KnowledgeEntry(knowledge_id, draft.text, word_ids, cases, source))
        for i, u in enumerate(word_ids):
            for v in word_ids[i + 1:]:
                self._link(u, v, knowledge_id)
        logger.info('K{} "{}" <- {}'.format(knowledge_id, draft.text, word_ids))
        return knowledge_id

    # lookup
    def lookup(self, surface):
        return self.word_index.get(utils.canonical(surface))

    def word(self, word_id):
        try:
            return self.words[word_id]
        except KeyError:
            raise UnknownWord(word_id) from None

    def entry(self, knowledge_id):
        return self.knowledge[knowledge_id]

    def knowledge_of(self, word_id):
        return sorted(self.word_knowledge.get(word_id, ()))

    def knowledge_containing(self, word_ids):
        """
        Ids of the knowledge units whose words include all of word_ids, ascending.
        The empty set is contained in every unit.
        """
        word_ids = sorted(set(word_ids))
        if not word_ids:
            return sorted(self.knowledge)
        if any(w not in self.words for w in word_ids):
            return []
        if len(word_ids) == 1:
            return self.knowledge_of(word_ids[0])
        # a unit holding the first word and every other one sits on each star link
        first = word_ids[0]
        result = None
        for other in word_ids[1:]:
            link = self.links.get(pair(first, other))
            if link is None:
                return []
            result = set(link.knowledge_ids) if result is None else result & link.knowledge_ids
            if not result:
                return []
        return sorted(result)

    def links_of(self, word_id):
        if word_id not in self.words:
            raise UnknownWord(word_id)
        neighbours = self.adjacency[word_id]
        return [neighbours[v] for v in sorted(neighbours)]

    def knowledge_neighbours(self, knowledge_id):
        """
        Knowledge units sharing at least one word with the given one, ascending
        """
        neighbours = set()
        for word_id in self.knowledge[knowledge_id].word_ids:
            neighbours |= self.word_knowledge[word_id]
        neighbours.discard(knowledge_id)
        return sorted(neighbours)

    def cases_of(self, word_id):
        """
        Deep cases the word takes across knowledge units, in order of first appearance
        """
        seen = []
        for knowledge_id in self.knowledge_of(word_id):
            case = self.knowledge[knowledge_id].cases[word_id]
            if case not in seen:
                seen.append(case)
        return seen

    def memberships(self):
        """
        Every (first word, second word, knowledge id) row, sorted by knowledge id then pair
        """
        rows = [(link.a, link.b, k) for link in self.links.values() for k in link.knowledge_ids]
        return sorted(rows, key=lambda row: (row[2], row[0], row[1]))

    def stats(self):
        return NetworkStats(
            words=len(self.words),
            knowledge_units=len(self.knowledge),
            links=len(self.links),
            total_weight=sum(link.weight for link in self.links.values()),
        )

    def weight_matrix(self):
        """
        Symmetric matrix of link weights, row/column i holds word id i + 1
        """
        n = len(self.words)
        matrix = np.zeros((n, n), dtype=np.int64)
        for (a, b), link in self.links.items():
            matrix[a - 1, b - 1] = link.weight
            matrix[b - 1, a - 1] = link.weight
        return matrix
