import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name="pycatalyst",
    description="Catalyst acceleration of first-order methods, with a convergence benchmark harness",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    keywords="optimization acceleration svrg saga miso proximal lasso logistic",
    license="MIT",
    packages=setuptools.find_packages(exclude=("tests", "tests.*")),
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
        "scipy>=1.6",
        "joblib>=1.0",
        "pyyaml>=5",
        "tqdm>=4",
        "python-dotenv>=0.10",
    ],
    entry_points={"console_scripts": ["pycatalyst = pycatalyst.cli:cli"]},
    setup_requires=["pytest-runner"],
    tests_require=["pytest"],
)
