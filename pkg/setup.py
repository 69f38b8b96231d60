#!/usr/bin/env python
import menger

try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup


def parse_requirements(path):
    with open(path) as handle:
        lines = [x.split('#')[0].strip() for x in handle]

    return [x for x in lines if x and not x.startswith('-r')]


requirements = parse_requirements('requirements/base.txt')
test_requirements = requirements + parse_requirements('requirements/development.txt')

setup(
    name=menger.menger_name,
    version=menger.__version__,
    description=menger.__description__,
    long_description=open('README.md').read(),
    author='Thorgate',
    author_email='hi@thorgate.eu',
    url='https://github.com/thorgate/tg-menger',
    packages=[
        'menger',
        'menger.solvers',
    ],
    include_package_data=True,
    install_requires=requirements,
    test_suite='py.test',
    tests_require=test_requirements,
    entry_points={
        'console_scripts': [
            'menger = menger.cli:main',
        ],
    },
    license="BSD",
    keywords='tg-menger menger disjoint paths treewidth reduction sat',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
