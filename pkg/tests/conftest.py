import logging

import numpy as np
import pytest

import data as Data
import core.logger as Logger
from model.learning import learn_document
from model.network import Network

from helpers import GANDHI, VILLAGE


@pytest.fixture(scope='session')
def resources():
    return Data.load_resources(Logger.default_options()['path'])


@pytest.fixture
def gandhi_network(resources):
    net = Network()
    learn_document(net, GANDHI, 'gandhi.txt', resources)
    return net


@pytest.fixture
def village_network(resources):
    net = Network()
    learn_document(net, VILLAGE, 'village.txt', resources)
    return net


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(autouse=True)
def base_logger():
    # main() binds handlers to the captured streams of one test
    yield logging.getLogger('base')
    logger = logging.getLogger('base')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = True
