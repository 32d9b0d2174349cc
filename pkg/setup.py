#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup, find_packages

setup(
    name="interlacekit",
    version='0.1.0',
    description=("interlace-kit: exact classification of sign-regular matrix "
                 "classes and verification of eigenvalue monotonicity and "
                 "interlacing"),
    packages=find_packages(exclude=["docs", "docs-build", "tests"]),
    install_requires=["sympy", "numpy", "scipy", "pandas", "tqdm"],
    extras_require={"dev": ["pytest", "pytest-cov", "hypothesis"],
                    "docs": ["sphinx", "sphinx-argparse"]},
    python_requires=">=3.8",
    license="MIT license",
    zip_safe=False,
    keywords=["linear algebra",
              "total positivity",
              "eigenvalue interlacing",
              "exact arithmetic"],
    test_suite="tests",
    include_package_data=True,
    tests_require=["pytest", "pytest-cov", "hypothesis"],
    entry_points = {
        "console_scripts": [
            "interlace-kit = interlacekit.cli.main:console_main",
            "interlace-classify = interlacekit.cli.classify:classify_main",
            "interlace-compound = interlacekit.cli.compound:compound_main",
            "interlace-verify = interlacekit.cli.verify:verify_main",
            "interlace-search = interlacekit.cli.search:search_main"
        ]
    }
)
