# -*- coding: utf-8 -*-
"""
Command line front end. Results go to stdout, diagnostics to stderr.

Exit status: 0 on success, 1 when a verification suite fails and 2 on
usage, parse or validation errors.
"""
import argparse
import json
import sys

from .version import __version__
from .core.utils.customlogger import logger, set_verbosity
from .core.utils.rendering import render_history
from .core import textio
from .core.bijections import phi, phi_cap, rho1, rho1_inv, rho2
from .core.codec import decode, encode
from .core.contfrac import FractionKinds, moments
from .core.datamodel.permutation import classify, cycles, profile, to_cycle_notation
from .core.verification import CHECK_NAMES, DEFAULT_N_MAX, run_check

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

_FRACTION_KINDS = {'stieltjes': FractionKinds.S_FRACTION,
                   'jacobi': FractionKinds.J_FRACTION}


def _read_permutation(args):
    text = ' '.join(args.images) if args.images else sys.stdin.read()
    return textio.parse_permutation(text)


def _read_history(args):
    return textio.parse_history(textio.read_text(args.source))


def _emit(args, text, payload):
    """ Print text, or the JSON payload when --format json is given. """
    if args.format == 'json':
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(text, end='' if text.endswith('\n') else '\n')


def _history_payload(h):
    return {'n': len(h),
            'steps': [{'kind': kind, 'xi': label.xi, 'eta': label.eta}
                      for kind, label in h]}


def cmd_stats(args):
    p = _read_permutation(args)
    prof = profile(p)
    kinds = classify(p)

    listing = dict(prof.asdict())
    listing.update({kind.lower(): values for kind, values in kinds.asdict().items()})

    text = '\n'.join(f'{name}: ' + ' '.join(str(i) for i in values) if values else f'{name}:'
                     for name, values in listing.items())
    _emit(args, text, {name: list(values) for name, values in listing.items()})
    return EXIT_OK


def cmd_cycles(args):
    p = _read_permutation(args)
    _emit(args, to_cycle_notation(p), [list(cycle) for cycle in cycles(p)])
    return EXIT_OK


def cmd_encode(args):
    h = encode(_read_permutation(args))
    text = textio.format_history(h)
    payload = _history_payload(h)
    if args.render:
        picture = render_history(h)
        text += picture + '\n'
        payload['render'] = picture.splitlines()
    _emit(args, text, payload)
    return EXIT_OK


def cmd_decode(args):
    p = decode(_read_history(args))
    _emit(args, textio.format_permutation(p), list(p))
    return EXIT_OK


def _history_command(operation):
    def _command(args):
        h = operation(_read_history(args))
        _emit(args, textio.format_history(h), _history_payload(h))
        return EXIT_OK
    return _command


def _permutation_command(operation):
    def _command(args):
        p = operation(_read_permutation(args))
        _emit(args, textio.format_permutation(p), list(p))
        return EXIT_OK
    return _command


cmd_rho1 = _history_command(rho1)
cmd_rho1_inv = _history_command(rho1_inv)
cmd_rho2 = _history_command(rho2)
cmd_phi = _permutation_command(phi)
cmd_phicap = _permutation_command(phi_cap)


def cmd_cf(args):
    result = moments(_FRACTION_KINDS[args.kind], args.order)

    lines = []
    for n, poly in enumerate(result):
        lines.append(f'mu_{n}:')
        lines.extend(poly.to_lines())
    _emit(args, '\n'.join(lines),
          {'kind': args.kind, 'moments': [poly.to_lines() for poly in result]})
    return EXIT_OK


def cmd_verify(args):
    report = run_check(args.check, args.n_max, args.workers)
    if args.format == 'text':
        print(report)
    else:
        print(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog='laguerrecodec',
        description='Permutation statistics, Laguerre histories and the bijections between them')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', help='log progress on stderr')
    common.add_argument('--format', choices=('text', 'json'), default=None,
                        help='output format (text, json for verify)')

    perm_input = argparse.ArgumentParser(add_help=False)
    perm_input.add_argument('images', nargs='*',
                            help='images of the permutation; read from stdin when omitted')

    history_input = argparse.ArgumentParser(add_help=False)
    history_input.add_argument('source', nargs='?', default='-',
                               help='history file; "-" or omitted reads stdin')

    subparsers = parser.add_subparsers(dest='command', required=True)

    stats = subparsers.add_parser('stats', parents=[common, perm_input],
                                  help='set-valued statistics of a permutation')
    stats.set_defaults(func=cmd_stats)

    _cycles = subparsers.add_parser('cycles', parents=[common, perm_input],
                                    help='cycle notation of a permutation')
    _cycles.set_defaults(func=cmd_cycles)

    _encode = subparsers.add_parser('encode', parents=[common, perm_input],
                                    help='Laguerre history of a permutation')
    _encode.add_argument('--render', action='store_true',
                         help='draw the Motzkin path (a "render" list in JSON output)')
    _encode.set_defaults(func=cmd_encode)

    _decode = subparsers.add_parser('decode', parents=[common, history_input],
                                    help='permutation of a Laguerre history')
    _decode.set_defaults(func=cmd_decode)

    for name, func, helptext in (('rho1', cmd_rho1, 'apply rho1 to a history'),
                                 ('rho1-inv', cmd_rho1_inv, 'apply the inverse of rho1'),
                                 ('rho2', cmd_rho2, 'apply the involution rho2')):
        sub = subparsers.add_parser(name, parents=[common, history_input], help=helptext)
        sub.set_defaults(func=func)

    for name, func, helptext in (('phi', cmd_phi, 'apply phi to a permutation'),
                                 ('phicap', cmd_phicap, 'apply the involution Phi')):
        sub = subparsers.add_parser(name, parents=[common, perm_input], help=helptext)
        sub.set_defaults(func=func)

    _cf = subparsers.add_parser('cf', parents=[common], help='continued fraction moments')
    _cf.add_argument('--kind', choices=sorted(_FRACTION_KINDS), default='stieltjes')
    _cf.add_argument('--order', type=int, default=DEFAULT_N_MAX)
    _cf.set_defaults(func=cmd_cf)

    _verify = subparsers.add_parser('verify', parents=[common], help='run a verification suite')
    _verify.add_argument('check', choices=CHECK_NAMES)
    _verify.add_argument('--n-max', type=int, default=DEFAULT_N_MAX)
    _verify.add_argument('--workers', type=int, default=1)
    _verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    set_verbosity(args.verbose)

    try:
        return args.func(args)
    except (ValueError, IndexError, OSError) as e:
        logger.error(f'{args.command}: {e}')
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
