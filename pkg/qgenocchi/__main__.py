"""Command-line front end for qgenocchi."""

import appdirs
import argparse
import collections
import csv
import io
import logging
import os
import sys

from qgenocchi import (classical, exceptions, identities, oracle, qfamilies,
                       render, settings, utils)
from qgenocchi.exact import ratfn_eval, ratfn_eval_at_one
from qgenocchi.schemas import Family, OutputFormat, OutputKind

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
CSV_HEADER = ('family', 'n', 'value')
EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

OutputRecord = collections.namedtuple('OutputRecord', [
    'kind',  # OutputKind
    'payload',  # exact value, or a JSON-ready dict for enclosures/reports
    'metadata',  # dict: family and n, or id for reports; maybe x, q, variant
])

_NUMBER_FUNCTIONS = {
    Family.EULER: classical.euler_number,
    Family.GENOCCHI: classical.genocchi_number,
    Family.BERNOULLI: classical.bernoulli_number,
    Family.Q_EULER: qfamilies.q_euler_number,
    Family.Q_GENOCCHI: qfamilies.q_genocchi_number,
    Family.Q_BERNOULLI: qfamilies.q_bernoulli_number,
}

_POLY_FUNCTIONS = {
    Family.EULER: classical.euler_poly,
    Family.GENOCCHI: classical.genocchi_poly,
    Family.Q_EULER: qfamilies.q_euler_poly,
    Family.Q_GENOCCHI: qfamilies.q_genocchi_poly,
}


class UsageError(Exception):

    """Invalid command-line usage detected after argument parsing."""

    pass


##############################################################################
# Output
##############################################################################


def _payload_json(record):
    if record.kind in (OutputKind.NUMBER, OutputKind.POLYNOMIAL):
        return render.to_json(record.payload)
    return record.payload


def _payload_text(record, output_format):
    if record.kind in (OutputKind.NUMBER, OutputKind.POLYNOMIAL):
        if output_format is not OutputFormat.LATEX:
            output_format = OutputFormat.PLAIN
        return render.render(record.payload, output_format)
    return render.dumps(record.payload)


def emit(records, output_format):
    """Render records as text in an OutputFormat.

    Raises ValueError for an unsupported format.
    """
    output_format = OutputFormat(output_format)
    if output_format is OutputFormat.JSON:
        return render.dumps([
            {'kind': record.kind.value, 'payload': _payload_json(record),
             'metadata': record.metadata}
            for record in records
        ])
    elif output_format is OutputFormat.CSV:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for record in records:
            writer.writerow((record.metadata.get('family'),
                             record.metadata.get('n'),
                             _payload_text(record, output_format)))
        return buf.getvalue().rstrip('\n')
    elif output_format is OutputFormat.LATEX:
        return '\n'.join(
            '{} & ${}$ \\\\'.format(record.metadata.get('n'),
                                   _payload_text(record, output_format))
            for record in records
        )
    return '\n'.join(_payload_text(record, output_format)
                     for record in records)


##############################################################################
# Subcommands
##############################################################################


def _check_n(n, max_n):
    if n < 0:
        raise UsageError('n must be non-negative, got {}'.format(n))
    if n > max_n:
        raise UsageError('n={} exceeds {}={}'
                         .format(n, settings.MAX_N_VARIABLE, max_n))


def _metadata(family, n, **extra):
    metadata = {'family': family.value, 'n': n}
    metadata.update((k, v) for k, v in extra.items() if v is not None)
    return metadata


def _cmd_num(args, max_n):
    family = Family(args.family)
    _check_n(args.n, max_n)
    if not family.is_q and (args.base_power != 1 or args.eval is not None
                            or args.limit_q1):
        raise UsageError('{} numbers do not depend on q'.format(family.value))
    if args.eval is not None and args.limit_q1:
        raise UsageError('--eval and --limit-q1 are exclusive')
    if args.base_power < 1:
        raise UsageError('--base-power must be positive')
    value = _NUMBER_FUNCTIONS[family](args.n)
    q0 = None
    if family.is_q:
        value = value.subst_qpow(args.base_power)
        if args.eval is not None:
            q0 = utils.parse_rational(utils.parse_assignment(args.eval, 'q'))
            value = ratfn_eval(value, q0)
        elif args.limit_q1:
            q0 = 1
            value = ratfn_eval_at_one(value)
    metadata = _metadata(family, args.n, q=None if q0 is None else str(q0))
    return [OutputRecord(OutputKind.NUMBER, value, metadata)], EXIT_OK


def _cmd_poly(args, max_n):
    family = Family(args.family)
    _check_n(args.n, max_n)
    if family not in _POLY_FUNCTIONS:
        raise UsageError('{} has no polynomials'.format(family.value))
    value = _POLY_FUNCTIONS[family](args.n)
    x = None
    kind = OutputKind.POLYNOMIAL
    if args.at is not None:
        x = int(utils.parse_assignment(args.at, 'x'))
        if x < 0:
            raise UsageError('x must be non-negative')
        value = value.eval_int(x) if family.is_q else value(x)
        kind = OutputKind.NUMBER
    return [OutputRecord(kind, value, _metadata(family, args.n, x=x))], \
        EXIT_OK


def _cmd_table(args, max_n):
    family = Family(args.family)
    _check_n(args.max_n, max_n)
    function = _NUMBER_FUNCTIONS[family]
    records = [OutputRecord(OutputKind.NUMBER, function(n),
                            _metadata(family, n))
               for n in range(args.max_n + 1)]
    return records, EXIT_OK


def _cmd_oracle(args, max_n):
    family = Family(args.family)
    if not family.is_q:
        raise UsageError('oracle needs a q-family')
    _check_n(args.n, max_n)
    record = oracle.check_closed_form(family, args.n, args.x, args.q,
                                      args.tol)
    payload = collections.OrderedDict([
        ('family', family.value),
        ('n', record.n),
        ('x', record.x),
        ('q', render.rat_to_json(record.q)),
        ('lo', render.rat_to_json(record.lo)),
        ('hi', render.rat_to_json(record.hi)),
        ('closed_value', render.rat_to_json(record.closed_value)),
        ('contained', record.contained),
    ])
    output = OutputRecord(OutputKind.ENCLOSURE, payload,
                          _metadata(family, args.n, x=args.x,
                                    q=str(record.q)))
    return [output], EXIT_OK if record.contained else EXIT_FAILURE


def _format_report(report, show_difference):
    params = ','.join('{}={}'.format(k, v) for k, v in report.params.items())
    status = 'HOLDS' if report.holds_exact else 'FAILS'
    if report.holds_exact != report.expected:
        status += ' (unexpected)'
    line = '{:<11} {:<16} {:<12} {}'.format(report.id_, report.variant,
                                            params, status)
    if report.oracle is not None:
        line += ' oracle={}'.format('contained' if report.oracle
                                    else 'missed')
    if show_difference and not report.holds_exact:
        line += '\n    difference: {}'.format(report.difference)
    return line


def _summary_lines(reports, show_all_differences):
    lines = [_format_report(report, show_all_differences or report.expected)
             for report in reports]
    verdicts = identities.parity_verdicts(reports)
    if verdicts:
        lines.append('')
        lines.append('parity of n:')
        for verdict in verdicts:
            lines.append('{:<11} {:<16} {:<5} {} ({} tuples)'.format(
                verdict.id_, verdict.variant, verdict.parity,
                'holds' if verdict.holds else 'fails', verdict.count
            ))
    return lines


def _errata_lines(reports):
    """Return the errata section for variants not expected to hold."""
    errata = identities.errata(reports)
    if not errata:
        return []
    lines = ['', 'errata:']
    for erratum in errata:
        if erratum.first_failure is None:
            failure = 'no failure in range'
        else:
            failure = 'first fails at {}'.format(','.join(
                '{}={}'.format(k, v) for k, v in erratum.first_failure.items()
            ))
        lines.append('{:<11} {:<16} {}'.format(erratum.id_, erratum.variant,
                                               failure))
        lines.append('    {}'.format(erratum.note))
    return lines


def _check_verify_params(spec, params, max_n):
    for param in spec.params:
        values = params.get(param.name, ())
        if param.odd and any(v % 2 == 0 for v in values):
            raise exceptions.ParityError('{} must be odd for this identity'
                                         .format(param.name))
    for value in params.get('n', ()):
        _check_n(value, max_n)


def _cmd_verify(args, max_n):
    spec = identities.get_spec(args.id)
    variant = identities.get_variant(spec, args.variant)
    params = utils.parse_params(args.params) if args.params else {}
    _check_verify_params(spec, params, max_n)
    reports = [identities.verify(spec.id_, variant.name, p)
               for p in identities.expand_params(spec, params)]
    code = (EXIT_OK if all(r.holds_exact for r in reports)
            else EXIT_FAILURE)
    if OutputFormat(args.format) is OutputFormat.JSON:
        records = [OutputRecord(OutputKind.REPORT,
                                identities.report_to_json(r, elapsed=False),
                                {'id': r.id_, 'variant': r.variant})
                   for r in reports]
        return emit(records, OutputFormat.JSON), code
    return '\n'.join(_summary_lines(reports, True)), code


def _suite_config(args):
    if args.config is not None:
        config = settings.load_config(args.config)
        ranges = collections.OrderedDict(
            (id_, entry['params'])
            for id_, entry in config.identities.items()
        )
        variants = {id_: entry['variants']
                    for id_, entry in config.identities.items()
                    if entry['variants']}
    else:
        config = settings.SuiteConfig(
            identities=None, tolerance=oracle.DEFAULT_TOLERANCE,
            report=None, jobs=1, arbitrate=True,
        )
        ranges, variants = identities.default_config(), {}
    return config, ranges, variants


def _cmd_suite(args, max_n):
    config, ranges, variants = _suite_config(args)
    jobs = args.jobs if args.jobs is not None else config.jobs
    report_path = args.report if args.report is not None else config.report
    for id_ranges in ranges.values():
        for value in id_ranges.get('n', ()):
            _check_n(value, max_n)
    tasks = identities.plan(ranges, variants, config.tolerance)
    runner = identities.SuiteRunner(jobs)

    def log_progress(report):
        logger.info('Verified {}/{}: {} {}'.format(
            runner.on_report.fire_count, len(tasks), report.id_,
            report.variant
        ))

    with runner.on_report.observing(log_progress):
        reports = runner.run(tasks)
    lines = _summary_lines(reports, False) + _errata_lines(reports)
    code = EXIT_OK
    if any(r.expected and not r.holds_exact for r in reports):
        code = EXIT_FAILURE
    if config.arbitrate:
        lines.append('')
        lines.append('q-genocchi closed form arbitration:')
        for verdict in oracle.arbitrate_genocchi(tol=config.tolerance):
            lines.append('{} [2]_q: {}'.format(
                'with' if verdict.two_bracket else 'without',
                'contained everywhere' if verdict.passed
                else 'missed at n={}, x={}, q={}'.format(*verdict.first_miss)
            ))
            if verdict.two_bracket and not verdict.passed:
                code = EXIT_FAILURE
    if report_path is not None:
        with open(report_path, 'w') as f:
            f.write(render.dumps([identities.report_to_json(r)
                                  for r in reports]) + '\n')
    return '\n'.join(lines), code


##############################################################################
# Entry point
##############################################################################


def _build_parser(default_log_path):
    parser = argparse.ArgumentParser(
        prog='qgenocchi',
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    parser.add_argument('-d', '--debug', action='store_true',
                        help='log detailed debugging messages')
    parser.add_argument('--log', default=default_log_path,
                        help='log file path')
    parser.add_argument('--out', default=None,
                        help='write output to this file instead of stdout')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    families = [f.value for f in Family]
    number_formats = ['plain', 'latex', 'json']

    num = subparsers.add_parser('num', help='compute a number')
    num.add_argument('family', choices=families)
    num.add_argument('n', type=int)
    num.add_argument('--base-power', type=int, default=1,
                     help='replace q by q^m')
    num.add_argument('--eval', default=None, metavar='q=<rat>',
                     help='evaluate at a rational q')
    num.add_argument('--limit-q1', action='store_true',
                     help='take the limit q -> 1')
    num.add_argument('--format', choices=number_formats, default='plain')

    poly = subparsers.add_parser('poly', help='compute a polynomial')
    poly.add_argument('family', choices=families)
    poly.add_argument('n', type=int)
    poly.add_argument('--at', default=None, metavar='x=<int>',
                      help='evaluate at an integer x')
    poly.add_argument('--format', choices=number_formats, default='plain')

    table = subparsers.add_parser('table', help='tabulate numbers')
    table.add_argument('family', choices=families)
    table.add_argument('--max-n', type=int, required=True)
    table.add_argument('--format', choices=['json', 'csv', 'latex'],
                       default='json')

    orc = subparsers.add_parser('oracle', help='check a closed form '
                                'against its series')
    orc.add_argument('family', choices=[f.value for f in Family if f.is_q])
    orc.add_argument('n', type=int)
    orc.add_argument('--x', type=int, default=0)
    orc.add_argument('--q', type=utils.parse_rational, required=True)
    orc.add_argument('--tol', type=utils.parse_rational,
                     default=oracle.DEFAULT_TOLERANCE)

    ver = subparsers.add_parser('verify', help='verify one identity')
    ver.add_argument('--id', required=True)
    ver.add_argument('--variant', default='printed',
                     help='printed, corrected or a variant name')
    ver.add_argument('--params', default=None,
                     metavar='n=<a..b>[,m=<list>]')
    ver.add_argument('--format', choices=['plain', 'json'], default='plain')

    suite = subparsers.add_parser('suite', help='run the identity suite')
    suite.add_argument('--config', default=None)
    suite.add_argument('--report', default=None)
    suite.add_argument('--jobs', type=int, default=None)
    return parser


_COMMANDS = {
    'num': _cmd_num,
    'poly': _cmd_poly,
    'table': _cmd_table,
    'oracle': _cmd_oracle,
    'verify': _cmd_verify,
    'suite': _cmd_suite,
}


def _configure_logging(args):
    """Set up file logging; return an error message or None."""
    directory = os.path.dirname(args.log)
    if directory and not os.path.isdir(directory):
        try:
            os.makedirs(directory)
        except OSError as e:
            return 'Failed to create directory: {}'.format(e)
    log_level = logging.DEBUG if args.debug else logging.WARNING
    logging.basicConfig(filename=args.log, level=log_level, format=LOG_FORMAT)
    return None


def _write(text, path):
    if path is None:
        print(text)
    else:
        with open(path, 'w') as f:
            f.write(text + '\n')


def main(argv=None):
    """Run the CLI and return the process exit code."""
    dirs = appdirs.AppDirs('qgenocchi', 'qgenocchi')
    default_log_path = os.path.join(dirs.user_log_dir, 'qgenocchi.log')
    parser = _build_parser(default_log_path)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    error = _configure_logging(args)
    if error is not None:
        print(error, file=sys.stderr)
        return EXIT_FAILURE

    try:
        max_n = settings.max_n()
        result, code = _COMMANDS[args.command](args, max_n)
        if not isinstance(result, str):
            fmt = getattr(args, 'format', OutputFormat.JSON.value)
            if args.command == 'oracle':
                fmt = OutputFormat.JSON.value
            result = emit(result, fmt)
    except (UsageError, ValueError) as e:
        # QGenError subclasses that are ValueErrors land here too
        if isinstance(e, exceptions.OracleDomainError):
            print('error: {}'.format(e), file=sys.stderr)
            return EXIT_FAILURE
        print('usage error: {}'.format(e), file=sys.stderr)
        return EXIT_USAGE
    except exceptions.QGenError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return EXIT_FAILURE
    _write(result, args.out)
    return code


if __name__ == '__main__':
    sys.exit(main())
