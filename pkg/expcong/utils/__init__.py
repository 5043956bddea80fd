# Utilities package: constants, exceptions, validation and output rendering
