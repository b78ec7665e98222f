import pandas as pd

import utils
from model.deep_case import word_type_for_case


def format_table(df):
    """
    Aligned text rendering of a dataframe; an empty one still shows its header
    """
    if df.empty:
        return '  '.join(df.columns)
    return df.to_string(index=False)


def words_table(net):
    words_df = pd.DataFrame(
        [],
        columns=['ID', 'Words', 'Word type', 'Deep case']
    )
    for word_id, node in sorted(net.words.items()):
        cases = net.cases_of(word_id)
        types = []
        for case in cases:
            word_type = word_type_for_case(case, node.entity).value
            if word_type not in types:
                types.append(word_type)
        words_df.loc[len(words_df)] = [
            utils.word_label(word_id),
            node.display_surface,
            '/'.join(types),
            '/'.join(c.value for c in cases),
        ]
    return words_df


def knowledge_table(net):
    knowledge_df = pd.DataFrame(
        [],
        columns=['Knowledge ID', 'Knowledge']
    )
    for knowledge_id, entry in sorted(net.knowledge.items()):
        knowledge_df.loc[len(knowledge_df)] = [utils.knowledge_label(knowledge_id), entry.text]
    return knowledge_df


def cases_table(net):
    cases_df = pd.DataFrame(
        [],
        columns=['Knowledge ID', 'ID', 'Words', 'Deep case']
    )
    for knowledge_id, entry in sorted(net.knowledge.items()):
        for word_id in entry.word_ids:
            cases_df.loc[len(cases_df)] = [
                utils.knowledge_label(knowledge_id),
                utils.word_label(word_id),
                net.words[word_id].display_surface,
                entry.cases[word_id].value,
            ]
    return cases_df


def links_table(net, knowledge_ids=None):
    """
    One row per (word pair, knowledge unit) membership, optionally restricted to some units
    """
    links_df = pd.DataFrame(
        [],
        columns=['First Word', 'Second Word', 'Knowledge ID', 'Weight']
    )
    for a, b, knowledge_id in net.memberships():
        if knowledge_ids is not None and knowledge_id not in knowledge_ids:
            continue
        links_df.loc[len(links_df)] = [
            utils.word_label(a),
            utils.word_label(b),
            utils.knowledge_label(knowledge_id),
            net.links[(a, b)].weight,
        ]
    return links_df


def inspect_tables(net):
    return [
        ('Words', words_table(net)),
        ('Knowledge units', knowledge_table(net)),
        ('Deep cases', cases_table(net)),
        ('Links', links_table(net)),
    ]


def question_table(trace):
    question_df = pd.DataFrame(
        [],
        columns=['Words']
    )
    for word in trace.get('content_words', []):
        question_df.loc[len(question_df)] = [word]
    if 'interrogative' in trace:
        question_df.loc[len(question_df)] = [trace['interrogative'].capitalize()]
    return question_df


def case_filter_lines(trace):
    lines = []
    for candidate in trace.get('candidates', []):
        label = utils.knowledge_label(candidate['knowledge_id'])
        match = candidate['case_match']
        if match is None:
            lines.append('{} "{}": no {} word'.format(
                label, candidate['text'], '/'.join(trace['required_cases'])))
        else:
            lines.append('{} "{}": {} ({}) answers "{}"'.format(
                label, candidate['text'], match['word'], match['case'], trace['interrogative']))
    multi_hop = trace.get('multi_hop')
    if multi_hop is not None:
        chain = multi_hop['chain']
        lines.append('multi-hop (max {}) from {}: {}'.format(
            multi_hop['max_hops'],
            ', '.join(utils.knowledge_label(k) for k in multi_hop['start']),
            ' -> '.join(utils.knowledge_label(k) for k in chain) if chain else 'no chain'))
    return lines


def trace_text(net, trace):
    """
    Derivation of an answer laid out as the question-words and knowledge-search tables
    """
    candidate_ids = {c['knowledge_id'] for c in trace.get('candidates', [])}
    parts = [
        'Question words',
        format_table(question_table(trace)),
        '',
        'Knowledge units relating the question words',
        format_table(links_table(net, candidate_ids)),
        '',
        'Case filter',
    ]
    parts.extend(case_filter_lines(trace) or ['(no candidate)'])
    return '\n'.join(parts)
