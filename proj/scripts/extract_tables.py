"""Regenerate data/table_reference.tsv and data/table_exact_seeds.tsv from
the LaTeX source of the d_LCD tables (passed as argv[1])."""
import re
import sys


def parse_table(lines, k_values):
    out = []
    for line in lines:
        line = line.replace("\\hline", "").replace("\\\\", "").strip()
        if not re.match(r"^\d+\s*&", line):
            continue
        cells = [c.strip() for c in line.split("&")]
        n = int(cells[0])
        for k, cell in zip(k_values, cells[1:]):
            cell = cell.replace("\\hline", "").strip()
            if not cell:
                continue
            star = cell.endswith("*")
            cell = cell.rstrip("*")
            if "--" in cell:
                lo, hi = (int(x) for x in cell.split("--"))
            else:
                lo = hi = int(cell)
            out.append((n, k, lo, hi, "*" if star else "-"))
    return out


def main():
    text = open(sys.argv[1]).read()
    t1 = text.split("\\label{table1}")[1].split("\\end{tabular}")[0]
    t2 = text.split("\\label{table2}")[1].split("\\end{tabular}")[0]
    rows = parse_table(t1.splitlines(), list(range(5, 18)))
    rows += parse_table(t2.splitlines(), list(range(18, 33)))
    rows.sort()
    with open("data/table_reference.tsv", "w") as f:
        f.write("# d_LCD(n,k) reference values for 16<=n<=40, 5<=k<=32.\n")
        f.write("# columns: n k lower upper annotation ('*' marked in source, '-' otherwise)\n")
        for r in rows:
            f.write("%d\t%d\t%d\t%d\t%s\n" % r)
    with open("data/table_exact_seeds.tsv", "w") as f:
        f.write("# exact d_LCD(n,k) values taken from data/table_reference.tsv\n")
        f.write("# columns: n k value\n")
        for n, k, lo, hi, _ in rows:
            if lo == hi:
                f.write("%d\t%d\t%d\n" % (n, k, lo))


if __name__ == "__main__":
    main()
