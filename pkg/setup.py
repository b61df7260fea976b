from setuptools import setup, find_packages

setup(
    name="nakayama-tau",
    version="1.0.0",
    description="tau-tilting calculus and braid-relation checks for linear and cyclic Nakayama algebras",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "click>=8.2.1",
        "python-dotenv>=1.1.1",
        "pydantic>=2.11.7",
        "rich>=14.0.0",
        "numpy>=1.26",
        "networkx>=3.2",
    ],
    entry_points={
        "console_scripts": [
            "nakayama-tau=nakayama_tau.cli:main",
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
