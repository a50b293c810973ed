#!/usr/bin/env python
# -*- coding: utf-8 -*-


import os

from setuptools import setup, find_packages

setup(
    name='sl2forms',
    version=open(os.path.join("sl2forms", "info.py")).readlines()[0].split("=")[-1].strip("' \n"),
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    scripts=[
        "scripts/sl2forms-verify",
    ],
    include_package_data=True,
    zip_safe=False,
    description="Exact verification of twisted de Rham complexes against affine sl2 Verma modules.",
    install_requires=open('requirements.txt').readlines(),
    extras_require={
        'test': open('requirements-test.txt').readlines(),
    }
)
