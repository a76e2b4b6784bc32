import setuptools

with open("README.md", "rb") as fin:
    long_description = fin.read().decode("utf-8")

req = ["numpy",
       "scipy",
       "PyYAML",
       ]

setuptools.setup(
    name="fuzzjack",
    version="0.1.0",
    packages=setuptools.find_packages(exclude=["examples", "examples.*"]),
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires='>=3.7',
    install_requires=req,
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["fuzzjack = fuzzjack.harness.cli:main"]},
    license="Apache",
)


# How to publish the library to pypi
# python setup.py sdist
# twine upload -s dist/*
