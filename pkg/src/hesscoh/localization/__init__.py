"""Fixed points, Billey restrictions and Peterson Schubert calculus."""
