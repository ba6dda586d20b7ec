from setuptools import setup


with open('README.rst') as f:
    readme = f.read()


setup(
    name='qgenocchi',
    version='0.1.0',
    description=('exact q-Euler, q-Genocchi and q-Bernoulli numbers, '
                 'polynomials and identity checks'),
    long_description=readme,
    license='MIT',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=['qgenocchi', 'qgenocchi.test'],
    python_requires='>=3.8',
    install_requires=[
        'purplex==0.2.4',
        'appdirs>=1.3.0',
    ],
    tests_require=[
        'pytest',
        'hypothesis',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': [
            'qgenocchi=qgenocchi.__main__:main',
        ],
    },
)
