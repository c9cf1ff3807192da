from setuptools import setup, find_packages

setup(
    name="coarse-kit",
    version="1.0.0",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    entry_points={
        "console_scripts": [
            "coarse-kit=cli.main:main",
        ],
    },
    install_requires=[
        "pydantic>=2.0.0",
        "rich>=14.0.0",
        "structlog>=24.0.0",
        "pyyaml>=6.0.0",
        "numpy>=1.24.0",
        "networkx>=3.0",
    ],
    extras_require={
        "test": [
            "pytest>=7.0.0",
            "hypothesis>=6.0.0",
        ],
    },
    python_requires=">=3.10",
)
