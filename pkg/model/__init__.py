import os
import logging
logger = logging.getLogger('base')


def create_network(store_path=None):
    """
    Loads the network stored at store_path, or creates an empty one when there is none yet
    """
    from .network import Network
    from .persistence import load
    if store_path is not None and os.path.exists(store_path):
        net = load(store_path)
    else:
        net = Network()
    logger.info('Network [{:s}] is created: {}'.format(net.__class__.__name__, net.stats()))
    return net
