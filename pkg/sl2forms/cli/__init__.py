from sl2forms.cli.config import COMMANDS, SUITES, RunSpec, build_run_spec, load_config, parse_assignments
from sl2forms.cli.models import FAIL, PASS, CheckRecord, Report, Summary, summarize
from sl2forms.cli.runner import run, run_checks, run_task, write_report
from sl2forms.cli.suites import CheckTask, build_tasks
