import setuptools
import os

with open("README.md", "r") as fh:
    long_description = fh.read()

with open('requirements.txt', 'rt') as reqs_file:
    REQUIREMENTS = reqs_file.readlines()

setuptools.setup(
    name="colembed",
    version=os.getenv('COLEMBED_VERSION', "0.0.1"),
    description="Properly colored and rainbow embeddings in bounded edge-colorings, certified by the lopsided local lemma",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=("test", "examples", "examples.*")),
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.8',
    install_requires=REQUIREMENTS,
    entry_points={
        'console_scripts': ['colembed=colembed.__main__:main'],
    },
)
