# Fixture tests
