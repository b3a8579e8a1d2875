from pebblebench.cli import run

run()
