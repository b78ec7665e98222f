from data.text_analysis import Token, PosTag, EntityTag
from model.deep_case import DeepCase, CaseAssignment
from model.extraction import KnowledgeUnitDraft
from model.network import Network

GANDHI = 'Gandhiji was born in Porbandar on 2nd October 1869.'
VILLAGE = 'Rahim is the brother of Karim. Karim lives in Porbandar.'


def tagged(*words):
    """
    Tokens from (surface, PosTag[, EntityTag]) tuples, positions in order
    """
    return [Token(w[0], i, w[1], w[2] if len(w) > 2 else EntityTag.NONE) for i, w in enumerate(words)]


def unit(text_words, cases, pos=PosTag.NOUN):
    """
    (draft, assignments) for a unit whose every word is a content word
    """
    tokens = tuple(Token(w, i, pos, EntityTag.NONE) for i, w in enumerate(text_words))
    draft = KnowledgeUnitDraft(' '.join(text_words), tokens)
    return draft, [CaseAssignment(t, c) for t, c in zip(tokens, cases)]


def random_network(rng, max_units=30, max_words=60):
    """
    Network built straight from drafts: random members and random deep cases
    """
    net = Network()
    n_words = int(rng.integers(2, max_words + 1))
    vocabulary = ['word{}'.format(i) for i in range(n_words)]
    cases = list(DeepCase)
    for k in range(int(rng.integers(1, max_units + 1))):
        size = min(int(rng.integers(1, 6)), n_words)
        chosen = rng.choice(n_words, size=size, replace=False)
        tokens = tuple(Token(vocabulary[i], p, PosTag.NOUN, EntityTag.NONE) for p, i in enumerate(chosen))
        assignments = [CaseAssignment(t, cases[int(rng.integers(len(cases)))]) for t in tokens]
        draft = KnowledgeUnitDraft('unit {} '.format(k) + ' '.join(t.surface for t in tokens), tokens)
        net.add_knowledge_unit(draft, assignments, 'random')
    return net
