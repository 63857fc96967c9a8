from __future__ import annotations


class ErrorsModArith:
    not_odd_prime = str(
        "{0} is not an odd prime."
    )
    factorial_range = str(
        "Factorial table bound {0} out of range: factorials vanish beyond p-1 = {1}."
    )
    zero_no_inverse = str(
        "Residue {0} is zero modulo {1}: zero has no inverse."
    )
    zero_no_log = str(
        "Residue {0} is zero modulo {1}: zero has no discrete logarithm."
    )
    no_primitive_root = str(
        "No primitive root found for {0}."
    )


class ErrorsResidueSets:
    zero_member = str(
        "Residue sets live in the unit group: {0} is zero modulo {1}."
    )
    member_range = str(
        "Residue {0} outside [1, {1}]."
    )
    modulus_mismatch = str(
        "Modulus mismatch: {0} != {1}."
    )
    invalid_window = str(
        "Window L={0}, N={1} violates 0 < L+1 <= L+N < p = {2}."
    )
    window_too_short = str(
        "Window N={0} is too short for this experiment (N >= 2 required)."
    )
    empty_z = str(
        "Ruzsa check needs a nonempty Z."
    )
    farey_range = str(
        "Farey count needs N^2 < p, got N={0}, p={1}."
    )
    farey_nonpositive = str(
        "Farey count needs N >= 1, got N={0}."
    )


class ErrorsCurveSums:
    degree_order = str(
        "Curve degrees must satisfy 1 <= k < j, got j={0}, k={1}."
    )
    degree_zero = str(
        "Curve degrees must be positive, got j={0}, k={1}."
    )
    degree_range = str(
        "Curve degree j={0} exceeds p-1 = {1}."
    )
    zero_frequency = str(
        "Line direction (b1, b2) = (0, 0) is not a line."
    )
    divisible_by_line = str(
        "Curve is divisible by the line {0}x + {1}y + {2}: outside the hypothesis of the curve-sum bound."
    )
    kernel_range = str(
        "Kernel length H={0} must satisfy 1 <= H < p = {1}."
    )
    epsilon_positive = str(
        "Epsilon must be positive, got {0}."
    )
    cutoff_positive = str(
        "Degree cutoff M must be at least 1, got {0}."
    )


class ErrorsCharacterSums:
    interval_range = str(
        "Interval length N={0} needs 2N <= p-1 = {1}."
    )
    character_index = str(
        "Character index {0} outside [0, {1}]."
    )
    zero_lambda = str(
        "Target residue is zero modulo {0}."
    )
    bruteforce_too_large = str(
        "Brute force instance too large: N^6 * |AA|^2 = {0} > {1}."
    )
    table_invariant = str(
        "Character table for p={0} fails the {1} check."
    )


class ErrorsRepresentation:
    bound_range = str(
        "Argument bound B={0} must satisfy 1 <= B <= p-1 = {1}."
    )
    zero_lambda = str(
        "Target residue is zero modulo {0}."
    )
    budget_exhausted = str(
        "Search budget of {0} lookups exhausted for lambda={1}."
    )
    bad_representation = str(
        "Representation {0} does not multiply to {1} modulo {2}."
    )
    no_bound = str(
        "No B <= p-1 suffices for p={0}."
    )
    trend_points = str(
        "Exponent fit needs at least {0} points, got {1}."
    )
    trend_positive = str(
        "Exponent fit needs positive p and B*, got ({0}, {1})."
    )
    exact_max_range = str(
        "Exact minimal max is limited to p <= {0}, got {1}."
    )


class ErrorsConfig:
    invalid_field = str(
        "Invalid value for {0}: {1}"
    )
    missing_field = str(
        "Experiment {0} needs {1}."
    )
    prime_range = str(
        "Prime range [{0}, {1}] is empty or inverted."
    )
    exclusive_fields = str(
        "Use either {0} or {1}, not both."
    )
    negative_offset = str(
        "window offsets must be >= 0, got {0}"
    )
    nonpositive_length = str(
        "window lengths must be >= 1, got {0}"
    )
    window_beyond_p = str(
        "L+N = {0}+{1} must be below p = {2}"
    )


class ErrorsReport:
    write_failed = str(
        "Failed to write report to {0}: {1}"
    )
