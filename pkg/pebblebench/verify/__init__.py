# flake8: noqa
from pebblebench.verify.scenario import (Scenario, Verdict, make_scenario,
                                         run, scenario_ids)
from pebblebench.verify.harness import (Manifest, load_manifest,
                                        run_manifest, run_scenario,
                                        select_runs)
from pebblebench.verify.report import (dumps_csv_report, dumps_json_report,
                                       dumps_text_report, write_csv_report,
                                       write_json_report)
