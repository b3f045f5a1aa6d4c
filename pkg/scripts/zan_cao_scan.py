"""Value-set size and omega of x^7 + a x over F_19 for every a."""
from valuebound.dilation import omega
from valuebound.families import zan_cao
from valuebound.valueset import value_set

if __name__ == "__main__":
    print(" a  |V|  omega  q-omega")
    for a in range(19):
        f = zan_cao(a)
        size = value_set(f).cardinality
        w = omega(f).omega
        print(f"{a:2d}  {size:3d}  {w:5d}  {19 - w:7d}")
    sharp = [a for a in range(19) if value_set(zan_cao(a)).cardinality == 13]
    print("a with |V| = 13:", sharp)
