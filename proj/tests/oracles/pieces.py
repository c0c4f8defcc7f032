def rel(i, literal=False):
    def conj(j, e1, e2):  # t_j^e1 a_j t_j^e2 -> letters (gen, sign)
        w=[]; w += [(4+j, 1 if e1>0 else -1)]*abs(e1); w.append((j,1)); w += [(4+j, 1 if e2>0 else -1)]*abs(e2); return w
    def inv(w): return [(g,-s) for g,s in reversed(w)]
    if literal:
        x=[conj(0,i,-i),conj(1,-i,-i),conj(2,i,-i),conj(3,-i,-i)]
    else:
        x=[conj(j,i,-i) for j in range(4)]
    w = x[0]+x[1]+inv(x[0])+inv(x[1])+x[2]+x[3]+inv(x[2])+inv(x[3])
    # reduce
    out=[]
    for l in w:
        if out and out[-1]==(l[0],-l[1]): out.pop()
        else: out.append(l)
    return out
def inv(w): return [(g,-s) for g,s in reversed(w)]
def maxpiece(A,B,same):
    LA,LB=len(A),len(B); best=0
    for a in range(LA):
        for b in range(LB):
            ra=A[a:]+A[:a]; rb=B[b:]+B[:b]
            if same and ra==rb: continue
            k=0
            while k<min(LA,LB) and ra[k]==rb[k]: k+=1
            best=max(best,k)
    return best
for lit in (False,True):
  for i in range(4):
    r=rel(i,lit); print(lit,i,len(r), "self:",max(maxpiece(r,r,True),maxpiece(r,inv(r),True)), "vs r_{i+1}:", max(maxpiece(r,rel(i+1,lit),False),maxpiece(r,inv(rel(i+1,lit)),False)))

# cross pieces stay at 2i+1 of 16i+8; self pieces against the inverse reach 3i+1
from fractions import Fraction
worst_cross = max(Fraction(max(maxpiece(rel(i), rel(k), False), maxpiece(rel(i), inv(rel(k)), False)), len(rel(i)))
                  for i in range(5) for k in range(i + 1, 6))
print("worst cross ratio over i<k<=5:", worst_cross)
print("r20 self piece:", Fraction(maxpiece(rel(20), inv(rel(20)), True), len(rel(20))))
