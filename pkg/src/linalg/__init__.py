"""Dense linear algebra and the statevector/unitary simulator."""
