"""Fan-out Controlled-U synthesis and scheduling toolkit."""
