"""Circuit intermediate representation and its JSON format."""
