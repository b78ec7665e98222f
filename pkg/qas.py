import sys
import argparse
import logging

import utils
import core.logger as Logger
import core.commands as Commands


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-c', '--config', type=str, default=None,
                        help='JSON file for configuration')
    common.add_argument('--store', type=str, default=None,
                        help='network store (.dcqa.json), defaults to $' + utils.STORE_ENV)
    common.add_argument('--lexicon', type=str, default=None)
    common.add_argument('--gazetteer', type=str, default=None)
    common.add_argument('--stopwords', type=str, default=None)
    common.add_argument('--interrogatives', type=str, default=None,
                        help='interrogative -> deep cases table')
    common.add_argument('--max-hops', dest='max_hops', type=int, default=None,
                        help='longest knowledge chain for indirect answers (default 3, <2 disables)')
    common.add_argument('--trace', action='store_true', help='print the derivation tables')
    common.add_argument('--output', choices=['plain', 'structured'], default=None)
    common.add_argument('--log-dir', dest='log_dir', type=str, default=None)
    common.add_argument('-v', '--verbose', action='store_true')

    parser = argparse.ArgumentParser(
        prog='qas', description='Document-grounded question answering over a deep-case word network')
    parser.add_argument('--version', action='version', version='%(prog)s ' + utils.__version__)
    subparsers = parser.add_subparsers(dest='command', required=True)

    ingest = subparsers.add_parser('ingest', parents=[common], help='learn documents into the store')
    ingest.add_argument('files', nargs='+')
    ask = subparsers.add_parser('ask', parents=[common], help='answer one question')
    ask.add_argument('question')
    subparsers.add_parser('repl', parents=[common], help='answer questions read from stdin')
    subparsers.add_parser('inspect', parents=[common], help='print the network tables')
    export = subparsers.add_parser('export-dot', parents=[common], help='export the network as Graphviz')
    export.add_argument('-o', '--out', type=str, default=None, help='dot file (stdout if absent)')
    export.add_argument('--png', type=str, default=None, help='also draw the network diagram')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    # parse configs
    try:
        opt = Logger.parse(args)
    except (OSError, ValueError) as e:
        print('error: cannot read configuration: {}'.format(e), file=sys.stderr)
        return utils.EXIT_IO
    # Convert to NoneDict, which return None for missing key.
    opt = Logger.dict_to_nonedict(opt)

    # logging
    Logger.setup_logger('base', opt['path']['log'], 'qas', level=logging.INFO, screen=True,
                        screen_level=logging.INFO if opt['verbose'] else logging.WARNING)
    logger = logging.getLogger('base')
    logger.info(Logger.dict2str(opt))

    return Commands.run(args, opt)


if __name__ == "__main__":
    sys.exit(main())
