import os

from setuptools import setup

with open("README.md", "r") as fh:
    long_description = fh.read()

# version is written by scripts/prebuild.py from the README
version = {}
version_file = os.path.join("cyclogoppa", "_version.py")
with open(version_file, "r") as fh:
    exec(fh.read(), version)

setup(
    name="cyclogoppa",
    author="cyclogoppa developers",
    description="Binary Goppa codes under projective-linear symmetry and their cyclic generator polynomials.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    version=version["__version__"],
    packages=[
        "cyclogoppa",
        "cyclogoppa.utils",
        "cyclogoppa.field",
        "cyclogoppa.geometry",
        "cyclogoppa.codes",
        "cyclogoppa.tests",
        "cyclogoppa.tests.module_tests",
    ],
    install_requires=["numpy", "galois", "tqdm"],
    extras_require={"test": ["hypothesis"]},
    entry_points={"console_scripts": ["cyclogoppa=cyclogoppa.cli:main"]},
    python_requires=">=3.9",
    setup_requires=["setuptools>=40.8.0"],
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License (GPL)",
        "Natural Language :: English",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.9",
    ],
    zip_safe=False,
)
