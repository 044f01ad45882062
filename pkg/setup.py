import os
import setuptools

# Utility function to read the README file (used for the long_description).
def read(fname):
    return open(os.path.join(os.path.dirname(__file__), fname)).read()

# install locally via `pip install -e .[test]` (-> for development)

setuptools.setup(
    name = "gapkit",
    version = "0.1.0",
    description = ("Gaussian distribution gap metrics for detector feature sets: reference models, "
                   "distribution / domain gaps, synthetic pool density and diversity, gap-aware selection."),
    license = "MIT",
    keywords = "mahalanobis distribution-gap domain-gap synthetic-data",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    long_description=read('README.md'),
    long_description_content_type="text/markdown",
    include_package_data=True,
    python_requires=">=3.8",
    install_requires=[
        "pyyaml",
        "typing_extensions>=4.5.0,<5.0.0",
        "numpy>=1.20",
        "scipy>=1.7",
    ],
    extras_require={
        "test": ["pytest"],
    },
    entry_points={
        "console_scripts": [
            "gapkit = gapkit.run:main",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Topic :: Scientific/Engineering",
        "License :: OSI Approved :: MIT License",
    ],
)
