# Services module

