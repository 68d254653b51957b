"""
Module that contains lookup dictionaries for easy logging and reporting of
condition names and other constants within koszulkit.
"""

#: Axioms of a directed graded linear category and the EI conditions on combinatorial
#: categories, as checked by :func:`koszulkit.lincat.validate`.
CONDITION_DESCRIPTIONS = {
    "P1": "all hom spaces are finite dimensional",
    "P2": "no basis element has negative degree",
    "P3": "off-diagonal hom spaces have no degree-0 part",
    "P4": "degree-0 endomorphism algebras are group algebras (semisimple in char 0)",
    "P5": "degree-1 morphisms join neighbouring objects only, so each object has finitely many degree-1 neighbours",
    "P6": "degree d+1 is spanned by degree-1 composed with degree-d morphisms",
    "P7": "endomorphism spaces have no positive-degree part",
    "P8": "the interval is finite and convex",
    "ASSOC": "composition is associative on basis triples",
    "E1": "endomorphism monoids are groups",
    "E2": "hom(x, y) is empty for x > y",
    "E3": "hom(x, y) is nonempty and finite for x <= y",
    "E4": "composition hom(y, z) x hom(x, y) -> hom(x, z) is surjective",
}

#: Conditions on the monoidal structure checked by
#: :func:`koszulkit.zoo.conditions.verify_c_conditions`.
C_CONDITION_DESCRIPTIONS = {
    "C1": "the unit morphism tensors functorially: I (.) (ba) = (I (.) b)(I (.) a)",
    "C2": "f -> I (.) f is injective on every hom-set",
    "C3": "minimal factorizations exist, f2 is unique given f1, f1 unique up to Aut(z)",
    "C4": "non-factorizable morphisms stay non-factorizable after postcomposition",
}

#: Exit codes of ``koszulkit`` subcommands.
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

exit_code_dictionary = {
    EXIT_OK: "all checks passed",
    EXIT_CHECK_FAILED: "a mathematical check failed",
    EXIT_USAGE: "usage or configuration error",
}

#: Human-readable family names used in log lines and reports.
FAMILY_NAME_LOOKUP = {
    "FI": "FI (finite sets and injections)",
    "FI_gamma": "FI_G (injections colored by a finite group)",
    "FI_prime_gamma": "FI'_G (colored injections, bijections of trivial total color)",
    "OI_gamma": "OI_G (increasing colored injections)",
    "FI_d": "FI_d (injections with d-colored complements)",
    "OI_d": "OI_d (increasing injections with d-colored complements)",
    "FS_gamma_op": "FS_G^op (opposite of colored surjections)",
    "OS_gamma_op": "OS_G^op (opposite of ordered colored surjections)",
    "VI": "VI_q (injective linear maps over F_q)",
}

#: Conditions checked by :func:`koszulkit.modules.validate_module`.
MODULE_CONDITION_DESCRIPTIONS = {
    "GROUP": "group generators act by a representation of G_x",
    "INTERTWINE": "arrow actions intertwine the left and right group actions",
    "RELATIONS": "every degree-2 relation of the category acts as zero",
}

#: Conditions checked by :func:`koszulkit.genetic.verify_crucial_lemma`.
LEMMA_CONDITION_DESCRIPTIONS = {
    "tops": "tops agree away from x and only grow at x",
    "dims": "dimensions add up to the syzygy of the restriction plus the complement",
    "split": "the cover of the complement injects and meets the remaining tops only in zero",
    "complement": "the split-off part matches the characters of the tops at x",
}
