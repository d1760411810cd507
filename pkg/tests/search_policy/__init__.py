# Search policy tests package
