"""Reference β-systems as exact expressions.

Names follow the operator tables: ``d2_02`` is the coupling of ``Tr(A²)Tr(B²)``.
``ea`` and ``eb`` are the signature signs, ``eta`` the anomalous dimension and
``h1, h2, h3`` the regulator constants.
"""

from __future__ import annotations

from .ncalg import Signature, word
from .scalar import Scalar, parse_scalar
from .truncations import operator_key

HERMITIAN1 = {
    "eta": "h1*(g2_2/2 + 2*g4)",
    "g4": "(1 + 2*eta)*g4 + 4*h2*g4**2 - h1*(4*g6 + g2_4/2)",
    "g2_2": "(2 + 2*eta)*g2_2 - 4*h1*(g2_4 + g6) + h2*(g2_2**2 + 8*g2_2*g4 + 12*g4**2)",
    "g6": "(2 + 3*eta)*g6 + 12*g4*g6*h2 - 6*g4**3*h3",
    "g2_4": "(3 + 3*eta)*g2_4 + h2*(g2_2*g2_4 + 8*g2_2*g6 + 12*g2_4*g4 + 48*g4*g6)"
            " - h3*(12*g2_2*g4**2 + 48*g4**3)",
}

# 2-matrix model, second order, large N; η-equations first
FUZZY2D = {
    'eta_a' : '2*h1*(a4+c22+2*d2_02+6*d2_2)',
    'eta_b' : '2*h1*(b4+c22+6*d02_02+2*d2_02)',
    'd1_1' : '-h1*(ea*(a4-c1111)+2*d1_12+6*d1_3)+d1_1*(eta+1)',
    'd01_01' : '-h1*(eb*(b4-c1111)+6*d01_03+2*d01_21)+d01_01*(eta+1)',
    'a4' : 'h2*(4*a4**2+4*c22**2)+a4*(2*eta+1)-h1*(24*a6*ea+4*c42*eb+4*d02_4*eb+4*d2_4*ea)',
    'b4' : 'h2*(4*b4**2+4*c22**2)+b4*(2*eta+1)-h1*(24*b6*eb+4*c24*ea+4*d02_04*eb+4*d2_04*ea)',
    'c22' : '-h1*(2*ea*c1212+eb*2*c2121+3*ea*c24+3*eb*c42+ea*d02_22+eb*d2_22)+h2*(2*a4*c22+2*b4*c22+2*ea*eb*c1111**2+2*ea*eb*c22**2)+c22*(2*eta+1)',
    'c1111' : '8*ea*eb*c1111*c22*h2+c1111*(2*eta+1)+h1*(4*ea*c1311+4*eb*c3111+2*ea*d02_1111+2*eb*d2_1111)',
    'a6' : '2*h2*(6*a4*a6+ea*eb*c22*c42)+a6*(3*eta+2)',
    'b6' : '2*h2*(6*b4*b6+ea*eb*c22*c24)+b6*(3*eta+2)',
    'c3111' : '4*h2*(a4*c3111+ea*eb*(c22*(c1311+2*c3111)-c1111*(2*c2121+c42)))+c3111*(3*eta+2)',
    'c2121' : '2*h2*(2*a4*c2121+ea*eb*(-2*c1111*c3111+4*c2121*c22+c22*c24))+c2121*(3*eta+2)',
    'c24' : '2*h2*(a4*c24+3*b4*c24+2*ea*eb*(c22*(3*b6+c2121+c24+c42)-c1111*c1311))+c24*(3*eta+2)',
    'c1311' : '4*h2*(b4*c1311+ea*eb*(c22*(2*c1311+c3111)-c1111*(2*c1212+c24)))+c1311*(3*eta+2)',
    'c1212' : '2*h2*(2*b4*c1212+ea*eb*(c22*(4*c1212+c42)-2*c1111*c1311))+c1212*(3*eta+2)',
    'c42' : '2*h2*(3*a4*c42+2*ea*eb*(3*a6*c22-c1111*c3111+c1212*c22+c22*c24+c22*c42)+b4*c42)+c42*(3*eta+2)',
    'd1_5' : '2*h2*(a4*(12*a6+5*d1_5)+18*a6*d1_3*ea+eb*(c42*(d1_12-c1111*ea)+c22*ea*(c3111+d1_32)))+d1_5*(3*eta+3)',
    'd01_05' : '2*h2*(b4*(12*b6+5*d01_05)+eb*(18*b6*d01_03+c22*ea*(c1311+d01_23))+c24*ea*(d01_21-c1111*eb))+d01_05*(3*eta+3)',
    'd11_11' : 'h2*(-a4*c1111*ea*eb-b4*c1111*ea*eb+2*c1111**2-4*c1111*c22-8*c1111*d11_11*ea*eb+4*c22**2+8*c22*d11_11*ea*eb+4*d11_11**2)+h1*(-2*c1212*eb-c1311*eb-2*c2121*ea-c3111*ea-2*d11_13*eb-2*d11_31*ea)+d11_11*(2*eta+2)',
    'd2_02' : 'h2*(a4*c22+4*a4*d2_02+b4*c22+4*b4*d2_02+c22**2*ea*eb+12*c22*d02_02+12*c22*d2_2+24*d02_02*d2_02+24*d2_02*d2_2)+h1*(-((1)/(2))*c24*ea-((1)/(2))*c42*eb-((1)/(2))*d02_22*ea-2*d02_4*eb-2*d2_04*ea-((1)/(2))*d2_22*eb)+d2_02*(2*eta+2)',
    'd1_3' : 'h2*(2*a4**2*ea+6*a4*d1_3-2*c1111*c22*ea+2*c22*d1_12)+h1*(-6*a6-c3111*ea*eb-d12_3*ea*eb-d1_32*ea*eb-5*d1_5-6*d3_3)+d1_3*(2*eta+2)',
    'd1_12' : 'h2*(2*a4*c22*ea-2*b4*c1111*ea+2*b4*d1_12-4*c1111*c22*eb-4*c1111*d1_12*ea*eb+4*c22**2*eb+4*c22*d1_12*ea*eb+6*c22*d1_3)+h1*(-2*c1212-2*c1311-c3111*ea*eb-2*c42*ea*eb-2*d12_12-3*d12_3*ea*eb-3*d1_14-d1_2111*ea*eb-2*d1_32*ea*eb)+d1_12*(2*eta+2)',
    'd01_21' : 'h2*(-2*a4*c1111*eb+2*a4*d01_21+2*b4*c22*eb-4*c1111*c22*ea-4*c1111*d01_21*ea*eb+4*c22**2*ea+6*c22*d01_03+4*c22*d01_21*ea*eb)+h1*(-c1311*ea*eb-2*c2121-2*c24*ea*eb-2*c3111-d01_1211*ea*eb-2*d01_23*ea*eb-3*d01_41-3*d21_03*ea*eb-2*d21_21)+d01_21*(2*eta+2)',
    'd01_03' : 'h2*(2*b4**2*eb+6*b4*d01_03-2*c1111*c22*eb+2*c22*d01_21)+h1*(-6*b6-c1311*ea*eb-5*d01_05-d01_23*ea*eb-6*d03_03-d21_03*ea*eb)+d01_03*(2*eta+2)',
    'd1_14' : '2*h2*(a4*c24+b4*(2*c1212+2*c1311+3*d1_14)-6*b6*c1111*ea*eb+6*b6*d1_12*eb-2*c1111*c24*ea*eb-2*c1111*d1_14*ea*eb+4*c1212*c22*ea*eb+4*c1212*d1_12*eb+4*c1311*c22*ea*eb+4*c1311*d1_12*eb+4*c22*c24*ea*eb+c22*c3111*ea*eb+2*c22*c42*ea*eb+2*c22*d1_14*ea*eb+c22*d1_2111*ea*eb+2*c22*d1_32*ea*eb+2*c24*d1_12*eb+3*c24*d1_3*ea)+d1_14*(3*eta+3)',
    'd1_32' : '2*h2*(5*a4*c42+2*a4*d1_32+6*a6*c22*ea*eb+b4*(c3111+d1_32)-2*c1111*c1212*ea*eb-4*c1111*c2121*ea*eb-2*c1111*c24*ea*eb-2*c1111*d1_2111*ea*eb+2*c1212*d1_12*eb+2*c1311*c22*ea*eb+2*c22*c3111*ea*eb+4*c22*c42*ea*eb+2*c22*d1_14*ea*eb+2*c22*d1_32*ea*eb+5*c22*d1_5*ea*eb+2*c24*d1_12*eb+2*c3111*d1_12*eb+2*c42*d1_12*eb+9*c42*d1_3*ea)+d1_32*(3*eta+3)',
    'd1_2111' : '2*h2*(a4*(2*c2121+3*c3111+d1_2111)-2*c1111*c1311*ea*eb-c1111*c24*ea*eb-2*c1111*c3111*ea*eb-2*c1111*c42*ea*eb-2*c1111*d1_2111*ea*eb-2*c1111*d1_32*ea*eb+2*c1212*c22*ea*eb+2*c1311*d1_12*eb+c2121*(8*c22*ea*eb+4*d1_12*eb+6*d1_3*ea)+4*c22*c3111*ea*eb+c22*d1_14*ea*eb+4*c22*d1_2111*ea*eb+c24*d1_12*eb+2*c3111*d1_12*eb+6*c3111*d1_3*ea)+d1_2111*(3*eta+3)',
    'd01_41' : '2*h2*(a4*(2*c2121+2*c3111+3*d01_41)-6*a6*c1111*ea*eb+6*a6*d01_21*ea+b4*c42-2*c1111*c42*ea*eb-2*c1111*d01_41*ea*eb+c1311*c22*ea*eb+4*c2121*c22*ea*eb+4*c2121*d01_21*ea+2*c22*c24*ea*eb+4*c22*c3111*ea*eb+4*c22*c42*ea*eb+c22*d01_1211*ea*eb+2*c22*d01_23*ea*eb+2*c22*d01_41*ea*eb+4*c3111*d01_21*ea+3*c42*d01_03*eb+2*c42*d01_21*ea)+d01_41*(3*eta+3)',
    'd2_2' : 'h2*(((a4**2)/(2))+8*a4*d2_2+((c1111**2)/(6))+((c22**2)/(3))+((8)/(3))*c22*d2_02+((8*d2_02**2)/(3))+24*d2_2**2)+h1*(-a6*ea-((c2121*eb)/(3))-((d2_22*eb)/(3))-((4*d2_4*ea)/(3)))+d2_2*(2*eta+2)',
    'd02_02' : 'h2*(((b4**2)/(2))+8*b4*d02_02+((c1111**2)/(6))+((c22**2)/(3))+((8)/(3))*c22*d2_02+24*d02_02**2+((8*d2_02**2)/(3)))+h1*(-b6*eb-((c1212*ea)/(3))-((4*d02_04*eb)/(3))-((d02_22*ea)/(3)))+d02_02*(2*eta+2)',
    'd01_23' : '2*h2*(a4*(c1311+d01_23)+5*b4*c24+2*b4*d01_23+6*b6*c22*ea*eb-4*c1111*c1212*ea*eb-2*c1111*c2121*ea*eb-2*c1111*c42*ea*eb-2*c1111*d01_1211*ea*eb+2*c1311*c22*ea*eb+2*c1311*d01_21*ea+2*c2121*d01_21*ea+4*c22*c24*ea*eb+2*c22*c3111*ea*eb+5*c22*d01_05*ea*eb+2*c22*d01_23*ea*eb+2*c22*d01_41*ea*eb+9*c24*d01_03*eb+2*c24*d01_21*ea+2*c42*d01_21*ea)+d01_23*(3*eta+3)',
    'd01_1211' : '2*h2*(b4*(2*c1212+3*c1311+d01_1211)-2*c1111*c1311*ea*eb-2*c1111*c24*ea*eb-2*c1111*c3111*ea*eb-c1111*c42*ea*eb-2*c1111*d01_1211*ea*eb-2*c1111*d01_23*ea*eb+c1212*(8*c22*ea*eb+6*d01_03*eb+4*d01_21*ea)+4*c1311*c22*ea*eb+6*c1311*d01_03*eb+2*c1311*d01_21*ea+2*c2121*c22*ea*eb+4*c22*d01_1211*ea*eb+c22*d01_41*ea*eb+2*c3111*d01_21*ea+c42*d01_21*ea)+d01_1211*(3*eta+3)',
    'd11_31' : '2*h2*(2*a4*(3*c2121+2*c3111+d11_31)-6*a6*c1111*ea*eb+b4*c3111-c1111*c1311*ea*eb-4*c1111*c2121*ea*eb-2*c1111*c24*ea*eb-6*c1111*c3111*ea*eb-4*c1111*c42*ea*eb-4*c1111*d11_31*ea*eb+4*c1212*c22*ea*eb+2*c1311*c22*ea*eb+8*c2121*c22*ea*eb+8*c2121*d11_11+8*c22*c3111*ea*eb+8*c22*c42*ea*eb+2*c22*d11_13*ea*eb+4*c22*d11_31*ea*eb+8*c3111*d11_11+4*c42*d11_11+2*d11_11*d11_31)+d11_31*(3*eta+3)',
    'd11_13' : '2*h2*(a4*c1311+2*b4*(3*c1212+2*c1311+d11_13)-6*b6*c1111*ea*eb-4*c1111*c1212*ea*eb-6*c1111*c1311*ea*eb-4*c1111*c24*ea*eb-c1111*c3111*ea*eb-2*c1111*c42*ea*eb-4*c1111*d11_13*ea*eb+8*c1212*c22*ea*eb+8*c1212*d11_11+8*c1311*c22*ea*eb+8*c1311*d11_11+4*c2121*c22*ea*eb+8*c22*c24*ea*eb+2*c22*c3111*ea*eb+4*c22*d11_13*ea*eb+2*c22*d11_31*ea*eb+4*c24*d11_11+2*d11_11*d11_13)+d11_13*(3*eta+3)',
    'd2_22' : '2*h2*(a4*(2*c2121+6*c42+3*d2_22)+2*(3*a6*c22*ea*eb-c1111*c1311*ea*eb-c1111*c3111*ea*eb-2*c1111*d2_1111*ea*eb+c1212*c22*ea*eb+4*c1212*d2_02*ea*eb+2*c2121*c22*ea*eb+12*c2121*d2_2+2*c22*c24*ea*eb+2*c22*c42*ea*eb+c22*d02_22*ea*eb+2*c22*d2_04*ea*eb+c22*d2_22*ea*eb+2*c22*d2_4*ea*eb+6*c24*d2_02*ea*eb+18*c42*d2_2+2*d02_22*d2_02*ea*eb+6*d2_2*d2_22)+b4*(2*c2121+d2_22))+d2_22*(3*eta+3)',
    'd2_1111' : '2*h2*(3*a4*c3111+2*a4*d2_1111-2*c1111*c1212*ea*eb-2*c1111*c42*ea*eb-2*c1111*d2_22*ea*eb+2*c1311*c22*ea*eb+8*c1311*d2_02*ea*eb+4*c22*c3111*ea*eb+2*c22*d02_1111*ea*eb+4*c22*d2_1111*ea*eb+24*c3111*d2_2+4*d02_1111*d2_02*ea*eb+12*d2_1111*d2_2)+d2_1111*(3*eta+3)',
    'd2_4' : '2*h2*(6*a4*(3*a6+d2_4)+72*a6*d2_2-c1111*c3111*ea*eb+2*c2121*c22*ea*eb+c22*c42*ea*eb+2*c22*d02_4*ea*eb+c22*d2_22*ea*eb+4*c42*d2_02*ea*eb+4*d02_4*d2_02*ea*eb+12*d2_2*d2_4)+d2_4*(3*eta+3)',
    'd2_04' : '2*h2*(a4*(c24+2*d2_04)+b4*(c24+4*d2_04)+6*b6*c22*ea*eb+24*b6*d2_02*ea*eb+2*c22*c24*ea*eb+c22*c42*ea*eb+2*c22*d02_04*ea*eb+c22*d2_22*ea*eb+12*c24*d2_2+4*d02_04*d2_02*ea*eb+12*d2_04*d2_2)+d2_04*(3*eta+3)',
    'd02_22' : '2*h2*(a4*(2*c1212+d02_22)+b4*(2*c1212+6*c24+3*d02_22)+2*(3*b6*c22*ea*eb-c1111*c1311*ea*eb-c1111*c3111*ea*eb-2*c1111*d02_1111*ea*eb+2*c1212*c22*ea*eb+12*c1212*d02_02+c2121*c22*ea*eb+4*c2121*d2_02*ea*eb+2*c22*c24*ea*eb+2*c22*c42*ea*eb+2*c22*d02_04*ea*eb+c22*d02_22*ea*eb+2*c22*d02_4*ea*eb+c22*d2_22*ea*eb+18*c24*d02_02+6*c42*d2_02*ea*eb+6*d02_02*d02_22+2*d2_02*d2_22*ea*eb))+d02_22*(3*eta+3)',
    'd02_1111' : '2*h2*(3*b4*c1311+2*b4*d02_1111-2*c1111*c2121*ea*eb-2*c1111*c24*ea*eb-2*c1111*d02_22*ea*eb+4*c1311*c22*ea*eb+24*c1311*d02_02+2*c22*c3111*ea*eb+4*c22*d02_1111*ea*eb+2*c22*d2_1111*ea*eb+8*c3111*d2_02*ea*eb+12*d02_02*d02_1111+4*d2_02*d2_1111*ea*eb)+d02_1111*(3*eta+3)',
    'd02_04' : '2*h2*(6*b4*(3*b6+d02_04)+72*b6*d02_02-c1111*c1311*ea*eb+2*c1212*c22*ea*eb+c22*c24*ea*eb+c22*d02_22*ea*eb+2*c22*d2_04*ea*eb+4*c24*d2_02*ea*eb+12*d02_02*d02_04+4*d2_02*d2_04*ea*eb)+d02_04*(3*eta+3)',
    'd02_4' : '2*h2*(a4*(c42+4*d02_4)+6*a6*c22*ea*eb+24*a6*d2_02*ea*eb+b4*(c42+2*d02_4)+c22*c24*ea*eb+2*c22*c42*ea*eb+c22*d02_22*ea*eb+2*c22*d2_4*ea*eb+12*c42*d02_02+12*d02_02*d02_4+4*d2_02*d2_4*ea*eb)+d02_4*(3*eta+3)',
    'd3_3' : '2*h2*(a4*(9*a6+6*d3_3)+ea*eb*(c22*(c3111+d12_3)-c1111*c2121))+d3_3*(3*eta+3)',
    'd12_3' : '2*h2*(a4*(c3111+3*(c42+d12_3))+ea*eb*(6*a6*c22-c1111*c24-2*c1111*c42-2*c1111*d12_3+2*c1212*c22+2*c1311*c22+2*c22*c3111+4*c22*c42+2*c22*d12_12+2*c22*d12_3+6*c22*d3_3)+b4*(c3111+d12_3))+d12_3*(3*eta+3)',
    'd21_21' : '2*h2*(a4*(4*c2121+3*c3111+2*d21_21)+ea*eb*(-3*a6*c1111-c1111*(2*c1212+c1311+2*(2*c2121+c3111+c42+2*d21_21))+c22*(c1311+4*c2121+2*c24+4*c3111+4*c42+3*d21_03+4*d21_21))+b4*c2121)+d21_21*(3*eta+3)',
    'd03_03' : '2*h2*(b4*(9*b6+6*d03_03)+ea*eb*(c22*(c1311+d21_03)-c1111*c1212))+d03_03*(3*eta+3)',
    'd21_03' : '2*h2*(a4*(c1311+d21_03)+b4*(c1311+3*(c24+d21_03))+ea*eb*(6*b6*c22-2*c1111*c24-c1111*c42-2*c1111*d21_03+2*c1311*c22+2*c2121*c22+4*c22*c24+2*c22*c3111+6*c22*d03_03+2*c22*d21_03+2*c22*d21_21))+d21_03*(3*eta+3)',
    'd12_12' : '2*h2*(a4*c1212+b4*(4*c1212+3*c1311+2*d12_12)+ea*eb*(-3*b6*c1111-c1111*(4*c1212+2*c1311+2*c2121+2*c24+c3111+4*d12_12)+c22*(4*c1212+4*c1311+4*c24+c3111+2*c42+4*d12_12+3*d12_3)))+d12_12*(3*eta+3)',
}


def golden_equations(model: str, sig: Signature | None = None) -> dict:
    """Parsed reference equations with signs substituted.

    Couplings absent from the truncation (traceless letters) are set to zero.
    """
    if model.startswith("hermitian1"):
        return {k: parse_scalar(v) for k, v in HERMITIAN1.items()}
    sig = sig or Signature((1, 1))
    env = {"ea": Scalar.const(sig.e[0]), "eb": Scalar.const(sig.e[1])}
    zero = {}
    if sig.e[0] == -1:
        zero.update({k: Scalar.const(0) for k in FUZZY2D if k.startswith("d1_")})
    if sig.e[1] == -1:
        zero.update({k: Scalar.const(0) for k in FUZZY2D if k.startswith("d01_")})
    out = {}
    for k, v in FUZZY2D.items():
        if k in zero:
            continue
        out[k] = parse_scalar(v, {**env, **zero})
    return out


# first-order supertrace of the 2-matrix field part, by operator
# ("A|ABB" is Tr(A)·Tr(ABB)); single-trace couplings carry no 1/N here
FIRST_ORDER_COEFFICIENTS = {
    'A|A': '(ea*a4-ea*c1111+24*ea*d2_2+2*eb*d11_11+2*N*d1_12+6*N*d1_3)',
    'B|B': '(2*ea*d11_11+eb*b4-eb*c1111+24*eb*d02_02+6*N*d01_03+2*N*d01_21)',
    'AA': '(2*ea*eb*N*d01_21+4*N**2*ea*d2_02+12*N**2*ea*d2_2+2*ea*N*a4+2*ea*N*c22+6*N*d1_3)',
    'BB': '(2*ea*eb*N*d1_12+12*N**2*eb*d02_02+4*N**2*eb*d2_02+2*eb*N*b4+2*eb*N*c22+6*N*d01_03)',
    'AAAA': '(2*N**2*ea*d2_4+12*ea*N*a6+10*ea*N*d1_5+2*N**2*eb*d02_4+2*eb*N*c42+2*eb*N*d01_41)',
    'BBBB': '(2*N**2*ea*d2_04+2*ea*N*c24+2*ea*N*d1_14+2*N**2*eb*d02_04+12*eb*N*b6+10*eb*N*d01_05)',
    'AABB': '(2*N**2*ea*d2_22+2*ea*N*c42+2*ea*N*d1_32+2*N**2*eb*d02_22+2*eb*N*c24+2*eb*N*d01_23)',
    'ABAB': '(2*N**2*ea*d2_1111+2*ea*N*c3111+2*ea*N*d1_2111+2*eb*N**2*d02_1111+2*eb*N*c1311+2*eb*N*d01_1211)',
    'AA|BB': '(8*ea*N*d02_4+2*ea*N*d2_22+2*ea*c42+6*ea*d12_3+2*eb*N*d02_22+8*eb*N*d2_04+2*eb*c24+6*eb*d21_03)',
    'A|AAA': '(10*ea*N*d1_5+12*ea*N*d3_3+12*ea*a6+16*ea*d2_4+2*eb*N*d12_3+2*eb*N*d1_32+2*eb*c3111+2*eb*d11_31)',
    'A|ABB': '(6*ea*N*d12_3+2*ea*N*d1_32+2*ea*c42+4*ea*d2_22+4*eb*N*d12_12+2*eb*N*d1_14+2*eb*c1311+2*eb*d11_13)',
    'B|AAB': '(2*ea*N*d01_41+4*ea*N*d21_21+2*ea*c3111+2*ea*d11_31+2*eb*N*d01_23+6*eb*N*d21_03+2*eb*c24+4*eb*d02_22)',
    'B|BBB': '(2*ea*N*d01_23+2*ea*N*d21_03+2*ea*c1311+2*ea*d11_13+10*eb*N*d01_05+12*eb*N*d03_03+12*eb*b6+16*eb*d02_04)',
    'AB|AB': '(2*ea*N*d11_31+2*ea*c2121+2*ea*d21_21+2*eb*N*d11_13+2*eb*c1212+2*eb*d12_12)',
    'AA|AA': '(8*ea*N*d2_4+6*ea*a6+18*ea*d3_3+2*eb*N*d2_22+2*eb*c2121+2*eb*d21_21)',
    'BB|BB': '(2*ea*N*d02_22+2*ea*c1212+2*ea*d12_12+8*eb*N*d02_04+6*eb*b6+18*eb*d03_03)',
}


def first_order_coefficients(sig: Signature | None = None) -> dict:
    """``FIRST_ORDER_COEFFICIENTS`` keyed by operator, signs substituted."""
    sig = sig or Signature((1, 1))
    env = {"ea": Scalar.const(sig.e[0]), "eb": Scalar.const(sig.e[1])}
    return {operator_key(*(word(w) for w in k.split("|"))) if "|" in k else operator_key(word(k), ()):
            parse_scalar(v, env) for k, v in FIRST_ORDER_COEFFICIENTS.items()}


# reported fixed points (unlisted couplings vanish)
HERMITIAN1_POINT = {"eta": -0.2494, "g4": -0.08791, "g2_2": -0.17415, "g6": -0.003386, "g2_4": -0.02423}
FUZZY02_POINT = {"eta": -0.3625, "a4": -0.07972, "c22": -0.03986, "d2_02": -0.01337,
                 "d11_11": -0.004201, "d2_2": -0.005156}
FUZZY20_POINT = {**FUZZY02_POINT, "d1_12": -0.00985, "d1_3": -0.00985, "d01_01": -0.2543}
REFERENCE_THETA = 0.2749

# two-relevant-direction points; reported critical exponents (θ1, θ2)
_B02 = ["eta", "a4", "a6", "c1111", "c2121", "c22", "c3111", "c42", "d2_02", "d2_04", "d2_1111",
        "d2_2", "d2_22", "d2_4", "d11_11", "d11_31", "d12_3", "d21_21", "d3_3"]
_B02_COLUMNS = [
    [-0.3625, -0.07972, 0, 0, 0, -0.03986, 0, 0, -0.01337, 0, 0, -0.005156, 0, 0, -0.3782, 0, 0, 0, 0],
    [-0.3625, -0.07972, 0, 0, 0, -0.03986, 0, 0, 0.08013, 0, 0, -0.03632, 0, 0, -0.004201, 0, 0, 0, 0],
    [-0.3418, -0.05812, -5.897e-6, 0.06126, -0.00001863, -0.05969, -0.00003726, -0.00003632, -0.01289,
     -0.00002598, -0.00005407, -0.004297, -0.000106, -0.00002598, -0.05657, -0.000226, -0.00005331,
     -0.00008135, -8.735e-6],
    [-0.3418, -0.05812, -5.897e-6, -0.06126, -0.00001863, -0.05969, 0.00003726, -0.00003632, -0.01289,
     -0.00002598, 0.00005407, -0.004297, -0.000106, -0.00002598, -5.008e-6, -1.14e-8, 5.71e-7,
     2.855e-7, 2.855e-7],
    [-0.3418, -0.1194, -0.00002453, 0, -3.053e-9, 0.001568, 0, 9.418e-7, 0.001253, 3.476e-6, 0,
     -0.009011, 2.107e-6, -0.0001095, -5.008e-6, -1.14e-8, 9.208e-7, -1.231e-8, -0.00003585],
]
_B20 = ["eta", "a4", "a6", "c1111", "c2121", "c22", "c3111", "c42", "d2_02", "d2_04", "d2_1111",
        "d2_2", "d2_22", "d2_4", "d12_3", "d21_21", "d3_3", "d1_12", "d1_14", "d1_2111", "d1_3",
        "d1_32", "d1_5", "d01_01", "d11_11", "d11_31"]
_B20_COLUMNS = [
    [-0.3625, -0.07972, 0, 0, 0, -0.03986, 0, 0, 0.08013, 0, 0, -0.03632, 0, 0, 0, 0, 0, -0.00985, 0,
     0, -0.00985, 0, 0, -0.2543, -0.004201, 0],
    [-0.3625, -0.07972, 0, 0, 0, -0.03986, 0, 0, -0.01337, 0, 0, -0.005156, 0, 0, 0, 0, 0, -0.00985, 0,
     0, -0.00985, 0, 0, -0.2543, -0.3782, 0],
    [-0.3418, -0.1194, 0.00002453, 0, 3.053e-9, 0.001568, 0, -9.418e-7, 0.001253, 3.476e-6, 0,
     -0.009011, -2.107e-6, 0.0001095, -9.208e-7, 1.231e-8, 0.00003585, 0.0003325, -1.925e-7, 1.275e-9,
     -0.02262, -1.269e-6, 0.00005281, -0.3901, -5.008e-6, 1.14e-8],
]
TWO_RELEVANT_POINTS = {
    (0, 2): [dict(zip(_B02, c)) for c in _B02_COLUMNS],
    (2, 0): [dict(zip(_B20, c)) for c in _B20_COLUMNS],
}
TWO_RELEVANT_THETA = (1.0318, 0.274913)
# reported (θ1, θ2) per column
TWO_RELEVANT_COLUMN_THETA = {
    (0, 2): [TWO_RELEVANT_THETA] * 2 + [(0.301298, 0.027688)] * 3,
    (2, 0): [TWO_RELEVANT_THETA] * 2 + [(0.3013, 0.02779)],
}


def reference_points(model: str, signature: tuple | None = None) -> list:
    """Reported fixed points usable as Newton seeds."""
    if model.startswith("hermitian1"):
        return [HERMITIAN1_POINT]
    sig = tuple(signature or (2, 0))
    if sig == (0, 2):
        return [FUZZY02_POINT] + TWO_RELEVANT_POINTS[sig]
    if sig == (2, 0):
        return [FUZZY20_POINT] + TWO_RELEVANT_POINTS[sig]
    return []


def seed_vector(point: dict, variables: list, dual_of: dict | None = None) -> list:
    """Coupling values of ``point`` in ``variables`` order; dual partners fill representatives."""
    partner = {rep: k for k, rep in (dual_of or {}).items()}
    return [point.get(v, point.get(partner.get(v, ""), 0.0)) for v in variables]
