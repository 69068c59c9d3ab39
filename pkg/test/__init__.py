# empty.
