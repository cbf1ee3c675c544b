import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

with open("requirements.txt", "r") as fh:
    requirements = fh.read().splitlines()

setuptools.setup(
    name="po-gamma",
    use_scm_version=True,
    setup_requires=['setuptools_scm'],
    author="po-gamma contributors",
    description="Verification and enumeration of finite ordered Gamma-semigroups.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests*"]),
    package_data={"po_gamma": ["fixtures/*.gps"]},
    include_package_data=True,
    install_requires=requirements,
    entry_points={
        "console_scripts": ["po-gamma = po_gamma.cli:main"]
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: GNU Affero General Public License v3",
        "Operating System :: OS Independent"
    ],
    license="AGPL-3.0"
)
