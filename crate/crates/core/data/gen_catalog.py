"""Regenerates catalog.json. Run from this directory: python3 gen_catalog.py"""

import json
from math import comb, factorial, prod

from sympy import isprime, primefactors

# name -> (prime factorisation of the order, elimination-table prime)
SPORADIC = {
    "M11": ({2: 4, 3: 2, 5: 1, 11: 1}, 11),
    "M12": ({2: 6, 3: 3, 5: 1, 11: 1}, 11),
    "J1": ({2: 3, 3: 1, 5: 1, 7: 1, 11: 1, 19: 1}, 19),
    "M22": ({2: 7, 3: 2, 5: 1, 7: 1, 11: 1}, 11),
    "J2": ({2: 7, 3: 3, 5: 2, 7: 1}, 7),
    "M23": ({2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1}, 23),
    "HS": ({2: 9, 3: 2, 5: 3, 7: 1, 11: 1}, 11),
    "J3": ({2: 7, 3: 5, 5: 1, 17: 1, 19: 1}, 19),
    "M24": ({2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1}, 23),
    "McL": ({2: 7, 3: 6, 5: 3, 7: 1, 11: 1}, 11),
    "He": ({2: 10, 3: 3, 5: 2, 7: 3, 17: 1}, 17),
    "Ru": ({2: 14, 3: 3, 5: 3, 7: 1, 13: 1, 29: 1}, 29),
    "Suz": ({2: 13, 3: 7, 5: 2, 7: 1, 11: 1, 13: 1}, 13),
    "O'N": ({2: 9, 3: 4, 5: 1, 7: 3, 11: 1, 19: 1, 31: 1}, 31),
    "Co3": ({2: 10, 3: 7, 5: 3, 7: 1, 11: 1, 23: 1}, 23),
    "Co2": ({2: 18, 3: 6, 5: 3, 7: 1, 11: 1, 23: 1}, 23),
    "Fi22": ({2: 17, 3: 9, 5: 2, 7: 1, 11: 1, 13: 1}, 13),
    "HN": ({2: 14, 3: 6, 5: 6, 7: 1, 11: 1, 19: 1}, 19),
    "Ly": ({2: 8, 3: 7, 5: 6, 7: 1, 11: 1, 31: 1, 37: 1, 67: 1}, 67),
    "Th": ({2: 15, 3: 10, 5: 3, 7: 2, 13: 1, 19: 1, 31: 1}, 19),
    "Fi23": ({2: 18, 3: 13, 5: 2, 7: 1, 11: 1, 13: 1, 17: 1, 23: 1}, 23),
    "Co1": ({2: 21, 3: 9, 5: 4, 7: 2, 11: 1, 13: 1, 23: 1}, 13),
    "J4": ({2: 21, 3: 3, 5: 1, 7: 1, 11: 3, 23: 1, 29: 1, 31: 1, 37: 1, 43: 1}, 43),
    "Fi24'": ({2: 21, 3: 16, 5: 2, 7: 3, 11: 1, 13: 1, 17: 1, 23: 1, 29: 1}, 29),
    "BM": ({2: 41, 3: 13, 5: 6, 7: 2, 11: 1, 13: 1, 17: 1, 19: 1, 23: 1, 31: 1, 47: 1}, 47),
    "M": ({2: 46, 3: 20, 5: 9, 7: 6, 11: 2, 13: 3, 17: 1, 19: 1, 23: 1, 29: 1,
           31: 1, 41: 1, 47: 1, 59: 1, 71: 1}, 71),
}


def entry(name, family, params, order, useful, signature, source):
    return {
        "name": name,
        "family": family,
        "params": params,
        "order": str(order),
        "useful_odd_indices": [str(u) for u in useful],
        "signature_primes": signature,
        "source": source,
    }


def main():
    out = []
    primes = [p for p in range(5, 72) if isprime(p)]
    for p in primes:
        useful = p * (p - 1) // 2 if (p * (p - 1) // 2) % 2 else p * (p + 1) // 2
        out.append(entry(f"PSL(2,{p})", "psl2", [p], p * (p * p - 1) // 2,
                         [useful], primefactors(useful), "formula"))
    for p in primes:
        out.append(entry(f"Alt({p})", "alt_prime", [p], factorial(p) // 2,
                         [p], [p], "formula"))
    for t in range(3, 7):
        n = 2**t
        w = 15 if t == 3 else comb(n, n // 2) // 2
        out.append(entry(f"Alt(2^{t})", "alt_2power", [t], factorial(n) // 2,
                         [w], primefactors(w), "formula"))
    for name, (fac, prime) in SPORADIC.items():
        order = prod(p**e for p, e in fac.items())
        out.append(entry(name, "sporadic", [], order, [], [prime], "paper-table"))
    with open("catalog.json", "w") as f:
        json.dump(out, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
