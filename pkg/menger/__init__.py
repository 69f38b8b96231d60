menger_name = 'tg-menger'
menger_description = 'Exact solvers, hardness reductions and cross-validation for the metric Menger problem.'
menger_version = '0.1.0'

# Version of the instance / solution / certificate file formats
format_version = '1'

__description__ = menger_description
__version__ = menger_version
