# -*- coding:utf-8 -*-

from setuptools import setup


setup(
    name="dgtransfer",
    version="0.3.0",
    packages=[
        "dgtransfer",
        "dgtransfer.utils",
    ],
    description="DG algebra structures on minimal free resolutions of powers of the maximal ideal, "
                "computed by homological perturbation.",
    license="MIT",
    keywords=[
        "dgtransfer", "homological perturbation", "dg algebra", "minimal free resolution", "koszul complex",
        "homotopy transfer", "a-infinity", "commutative algebra"
    ],
    python_requires=">=3.8",
    install_requires=[
        "sympy>=1.12",
        "coloredlogs>=15.0"
    ],
    extras_require={
        "test": ["hypothesis>=6.0"]
    },
    entry_points={
        "console_scripts": [
            "dgtransfer = dgtransfer.cli:main"
        ]
    },
)
