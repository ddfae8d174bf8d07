from setuptools import setup, find_packages

setup(
    name="hook-identities",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    include_package_data=True,
    install_requires=[
        "Click",
        "pyyaml>=6.0",
        "tqdm>=4.65.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "hook-identities=scripts.cli:cli",
        ],
    },
)
