from setuptools import find_packages, setup

ver = '0.1.0'

setup(
    name='limbkit',
    version=ver,
    description='Design toolkit for a linear-actuated transfemoral prosthesis: ball-screw sizing, series elastic '
                'actuator force control simulation, gait loads, socket stiffness mapping and stress checks.',
    python_requires='>=3.8',
    install_requires=['numpy>=1.22.3', 'scipy>=1.8.0', 'pandas>=1.5.3', 'pint>=0.19.2'],
    extras_require={'test': ['pytest>=7.1.1']},
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    package_data={'limbkit': ['data/*.json']},
    entry_points={'console_scripts': ['limbkit=limbkit.cli:main']},
)
