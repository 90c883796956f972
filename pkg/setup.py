from setuptools import setup, find_packages
from runlib.fileIO import appVersionStr

setup(
    name='logEuler',
    version=appVersionStr,
    license='GPLv3',
    packages=find_packages(exclude=['test', 'examples']),
    description='A pseudospectral simulator and analysis toolkit for the log-regularized 2D Euler equations',
    long_description=open('README.md').read(),
    install_requires=open('requirements.txt').read().split()
)
