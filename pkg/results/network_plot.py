import numpy as np
import graphviz
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

import utils


def node_label(net, word_id):
    cases = ', '.join(c.value for c in net.cases_of(word_id))
    return '{} ({})'.format(net.words[word_id].display_surface, cases)


def edge_label(link):
    return ','.join(utils.knowledge_label(k) for k in sorted(link.knowledge_ids))


def network_to_dot(net):
    """
    Graphviz source of the network: one node per word labelled "surface (cases)",
    one undirected edge per link labelled with its knowledge ids, both in id order.
    """
    graph = graphviz.Graph('network')
    if net.words:
        graph.attr('node', shape='oval', fontname='Helvetica', fontsize='10')
    for word_id in sorted(net.words):
        graph.node('w{}'.format(word_id), label=node_label(net, word_id))
    for (a, b), link in sorted(net.links.items()):
        graph.edge('w{}'.format(a), 'w{}'.format(b), label=edge_label(link),
                   penwidth='{:.2f}'.format(np.sqrt(link.weight)))
    return graph.source


def circular_layout(n):
    angles = np.linspace(0, 2 * np.pi, n, endpoint=False) + np.pi / 2
    return np.stack([np.cos(angles), np.sin(angles)], axis=1)


def plot_network(net, output_path, figsize=(8, 8)):
    """
    Draws the network on a circle: edge width grows with link weight, edges carry
    their knowledge ids and nodes their surface and deep cases.
    """
    word_ids = sorted(net.words)
    positions = circular_layout(len(word_ids))
    index = {word_id: i for i, word_id in enumerate(word_ids)}
    weights = net.weight_matrix()

    fig, ax = plt.subplots(figsize=figsize)
    for (a, b), link in sorted(net.links.items()):
        pa, pb = positions[index[a]], positions[index[b]]
        ax.plot([pa[0], pb[0]], [pa[1], pb[1]], color='grey',
                linewidth=1.5 * weights[a - 1, b - 1], zorder=1)
        middle = (pa + pb) / 2
        ax.text(middle[0], middle[1], edge_label(link), fontsize=8, color='darkred',
                ha='center', va='center', zorder=3)
    if word_ids:
        ax.scatter(positions[:, 0], positions[:, 1], s=600, color='white',
                   edgecolors='black', zorder=2)
    for word_id in word_ids:
        x, y = positions[index[word_id]]
        ax.text(x, y - 0.12, node_label(net, word_id), fontsize=9, ha='center', va='top', zorder=3)
        ax.text(x, y, utils.word_label(word_id), fontsize=8, ha='center', va='center', zorder=3)
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect('equal')
    ax.axis('off')
    ax.set_title('Network diagram')
    plt.savefig(output_path, bbox_inches='tight')
    plt.close(fig)
