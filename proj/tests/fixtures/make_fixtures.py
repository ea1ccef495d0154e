"""Writes the CORRCLUST fixtures and prints their LP optima as computed by
SciPy/HiGHS. The printed values are frozen into tests/test_lp.cpp."""
import itertools, random
import numpy as np
from scipy.optimize import linprog

def write(path, n, K, tau, mu, w):
    with open(path,'w') as f:
        f.write("CORRCLUST 1\n")
        f.write(f"N {n} K {K} TAU {tau}\n")
        f.write("MU " + " ".join(repr(m) for m in mu) + "\n")
        for u in range(n):
            for v in range(u+1,n):
                a,b = w[(u,v)]
                f.write(f"E {u} {v} {a!r} {b!r}\n")

def lp(n, K, mu, w):
    pairs = [(u,v) for u in range(n) for v in range(u+1,n)]
    idx = {p:i for i,p in enumerate(pairs)}
    X = lambda a,b: idx[(min(a,b),max(a,b))]
    nv = len(pairs)+n
    c = np.zeros(nv); const = 0
    for p in pairs:
        c[idx[p]] = w[p][0]-w[p][1]; const += w[p][1]
    for v in range(n): c[len(pairs)+v] = mu[v]
    A=[];b=[]
    for t in itertools.combinations(range(n),3):
        for z in t:
            u,v = [q for q in t if q!=z]
            row=np.zeros(nv); row[X(u,v)]+=1; row[X(u,z)]-=1; row[X(z,v)]-=1
            A.append(row); b.append(0)
    for u in range(n):
        row=np.zeros(nv)
        for v in range(n):
            if v!=u: row[X(u,v)]-=1
        row[len(pairs)+u]=-1
        A.append(row); b.append(K-(n-1))
    bounds=[(0,1)]*len(pairs)+[(0,None)]*n
    r=linprog(c,A_ub=np.array(A) if A else None,b_ub=np.array(b) if b else None,bounds=bounds,method='highs')
    assert r.status==0
    return r.fun+const

random.seed(7)
fx = {}
# triangle
w={(0,1):(1,0),(1,2):(1,0),(0,2):(0,1)}
fx['triangle']=(3,2,'1',[0,0,0],w)
# perfect: two cliques of size 2
w={(0,1):(1,0),(2,3):(1,0),(0,2):(0,1),(0,3):(0,1),(1,2):(0,1),(1,3):(0,1)}
fx['perfect']=(4,4,'1',[0,0,0,0],w)
w={p:(1,0) for p in itertools.combinations(range(4),2)}
fx['k4_unit']=(4,1,'1',[1,1,1,1],w)
def rw(tau):
    k=random.randint(0,2)
    if k==0: return (1,0) if random.random()<.5 else (0,1)
    p=round(random.random(),3)
    if k==1: return (p, round(1-p,3))
    return (p, round(random.uniform(1-p, tau),3))
w={p:rw(2.0) for p in itertools.combinations(range(5),2)}
fx['weighted5']=(5,1,'2',[1,0,0.5,1,0.25],w)
w={p:rw(9.0) for p in itertools.combinations(range(6),2)}
fx['weighted6_inf']=(6,2,'INF',[0,1,1,0,1,0.5],w)
w={p:rw(1.0) for p in itertools.combinations(range(7),2)}
fx['weighted7']=(7,1,'1',[1]*7,w)
# star for pivot: 0 positive to 1,2,3
w={p:((1,0) if p[0]==0 else (0,1)) for p in itertools.combinations(range(4),2)}
fx['star4']=(4,1,'1',[1,1,1,1],w)
for name,(n,K,tau,mu,w) in fx.items():
    write(name+'.txt', n,K,tau,mu,w)
    print(name, repr(lp(n,K,mu,w)))
