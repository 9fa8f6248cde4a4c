from setuptools import setup, find_packages
import os
import re


def read_version(fname):
    """Reading __version__ without importing the package (numpy may be absent at build time)."""
    filepath = os.path.join(os.path.dirname(__file__), fname)
    with open(filepath, encoding='utf-8') as init_file:
        return re.search(r"__version__ = '([^']+)'", init_file.read()).group(1)


if __name__ == '__main__':

    with open("README.md", encoding='utf-8') as f:
        long_description = f.read()

    setup(
        name='nctorus',
        version=read_version(os.path.join('nctorus', '__init__.py')),
        packages=find_packages(exclude=['tests', 'tests.*']),
        description='Truncated spectral triples of noncommutative tori, their finite coverings and the Moyal '
                    'matrix calculus, with brute-force verification suites',
        long_description=long_description,
        long_description_content_type='text/markdown',
        license='MIT',
        python_requires='>=3.9',
        install_requires=['numpy>=1.21', 'scipy>=1.7'],
        extras_require={'tests': ['pytest>=7', 'hypothesis>=6']},
        entry_points={'console_scripts': ['nctorus = nctorus.cli:main']},
        keywords=['noncommutative', 'torus', 'spectral', 'triple', 'dirac', 'clifford', 'covering', 'moyal',
                  'star', 'product', 'verification'],
        classifiers=["Programming Language :: Python :: 3",
                     "Programming Language :: Python :: 3.9",
                     "Programming Language :: Python :: 3.10",
                     "Programming Language :: Python :: 3.11",
                     "Programming Language :: Python :: 3.12",
                     "License :: OSI Approved :: MIT License",
                     "Operating System :: OS Independent",
                     "Topic :: Scientific/Engineering :: Mathematics"]
    )
