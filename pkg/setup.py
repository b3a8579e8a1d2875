from setuptools import setup, find_packages
from distutils.cmd import Command
from subprocess import call

import pebblebench


class DocCommand(Command):
    '''Generate doc with mkdocs'''

    description = "Generate documentation"
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        call(['mkdocs', 'build', '-q', '-d', 'pebblebench-doc'])


setup(
    name="pebblebench",
    version=pebblebench.__version__,
    packages=find_packages(),
    description="Pebblebench: Ehrenfeucht-Fraisse games for subgraph "
                "isomorphism on connected graphs",
    long_description=open('README.md').read(),
    long_description_content_type='text/markdown',
    install_requires=['docopt', 'numpy', 'networkx', 'path.py', 'path<17', 'tqdm',
                      'joblib'],
    setup_requires=['pytest-runner'],
    tests_require=['pytest', 'hypothesis'],
    include_package_data=True,
    package_data={'pebblebench': ['asset/*.json']},
    entry_points={
        'console_scripts': ['pebblebench=pebblebench.cli:run'],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3.6",
        'Programming Language :: Python :: Implementation :: CPython',
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    license="Apache 2.0",
    cmdclass={'doc': DocCommand}
)
