# Package tests
