from setuptools import find_packages, setup

with open('requirements.txt') as f:
    requirements = [line.strip() for line in f if line.strip() and not line.startswith(('green', 'parameterized'))]

setup(
    name='szegolab',
    version='0.1.0',
    description='Numerical lab for Toeplitz determinant ratios of measures on the unit circle',
    license='Apache-2.0',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    python_requires='>=3.6',
    install_requires=requirements,
    extras_require={'test': ['green==2.11.0', 'parameterized==0.6.1']},
    entry_points={'console_scripts': ['szegolab=szegolab.driver.__main__:run']},
)
