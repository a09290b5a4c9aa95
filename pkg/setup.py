#!/usr/bin/env python

import os
import re
import sys
from setuptools import setup

if sys.argv[-1] == 'compile':
    os.system('python setup.py bdist_wheel')
    sys.exit()

# read the contents of your README file
from os import path
this_directory = path.abspath(path.dirname(__file__))

# const.py is read as text so installing does not import the dependencies
with open(path.join(this_directory, 'pyfedcoalition', 'const.py'), encoding='utf-8') as f:
    PYFEDCOALITION_VERSION = re.search(r"^PYFEDCOALITION_VERSION = [\"']([^\"']+)", f.read(), re.M).group(1)
with open(path.join(this_directory, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    name="pyfedcoalition",
    version=PYFEDCOALITION_VERSION,
    description="Conflict-free, free-rider-free coalition formation for cross-silo federated learning",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=['pyfedcoalition', 'pyfedcoalition.common'],
    include_package_data=True,
    classifiers=[ "Programming Language :: Python :: 3",
                    "License :: OSI Approved :: Apache Software License",
                    "Operating System :: OS Independent",
    ],
    install_requires=[
        'networkx>=3.1',
        'numpy',
        'pydot',
        'sentry-sdk',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['coalitions=pyfedcoalition.fcCli:main'],
    },
    python_requires='>=3.8',
)
