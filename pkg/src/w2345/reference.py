"""Curated reference expressions the workbench verifies against.

Everything here is stored in the package's text grammar and parsed on
demand: the defining states of the primary generators, the expected
generator product (OPE) table, the null-field relations, the polynomial
images in the associative quotient and the C2 quotient, the singular-vector
normal forms at small levels, the Groebner data, and the module top-level
eigenvalue formulas.
"""

# -- defining states of the primary generators (weight 3, 4, 5) --------------

W3_TEXT = (
    "k^2 * h(-3)|0> + 3*k * h(-2)h(-1)|0> + 2 * h(-1)h(-1)h(-1)|0>"
    " - 6*k * h(-1)e(-1)f(-1)|0> + 3*k^2 * e(-2)f(-1)|0> - 3*k^2 * e(-1)f(-2)|0>"
)

W4_TEXT = (
    "-2*k^2*(k^2+k+1) * h(-4)|0>"
    " - 8*k*(k^2+k+1) * h(-3)h(-1)|0>"
    " - k*(5*k^2-6) * h(-2)h(-2)|0>"
    " - 2*k*(11*k+6) * h(-2)h(-1)h(-1)|0>"
    " - (11*k+6) * h(-1)h(-1)h(-1)h(-1)|0>"
    " + 4*k^2*(6*k-5) * h(-2)e(-1)f(-1)|0>"
    " + 4*k*(11*k+6) * h(-1)h(-1)e(-1)f(-1)|0>"
    " - 4*k^2*(5*k+11) * h(-1)e(-2)f(-1)|0>"
    " + 4*k^2*(5*k+11) * h(-1)e(-1)f(-2)|0>"
    " + 8*k^2*(k-3)*(k-2) * e(-3)f(-1)|0>"
    " - 4*k^2*(3*k^2-3*k+8) * e(-2)f(-2)|0>"
    " - 2*k^2*(6*k-5) * e(-1)e(-1)f(-1)f(-1)|0>"
    " + 8*k^2*(k^2+k+1) * e(-1)f(-3)|0>"
)

W5_TEXT = (
    "-2*k^3*(k^2+3*k+5) * h(-5)|0>"
    " - 10*k^2*(k^2+3*k+5) * h(-4)h(-1)|0>"
    " - 5*k^2*(3*k^2-4) * h(-3)h(-2)|0>"
    " - 5*k*(7*k^2+12*k+16) * h(-3)h(-1)h(-1)|0>"
    " - 15*k*(3*k^2-4) * h(-2)h(-2)h(-1)|0>"
    " - 5*k*(19*k+12) * h(-2)h(-1)h(-1)h(-1)|0>"
    " - 2*(19*k+12) * h(-1)h(-1)h(-1)h(-1)h(-1)|0>"
    " + 10*k^2*(4*k^2-7*k+8) * h(-3)e(-1)f(-1)|0>"
    " + 20*k^2*(10*k-7) * h(-2)h(-1)e(-1)f(-1)|0>"
    " + 10*k*(19*k+12) * h(-1)h(-1)h(-1)e(-1)f(-1)|0>"
    " - 5*k^2*(11*k^2-14*k+12) * h(-2)e(-2)f(-1)|0>"
    " - 5*k^2*(17*k+64) * h(-1)h(-1)e(-2)f(-1)|0>"
    " + 15*k^2*(3*k^2-4) * h(-2)e(-1)f(-2)|0>"
    " + 5*k^2*(17*k+64) * h(-1)h(-1)e(-1)f(-2)|0>"
    " + 30*k^2*(k-4)*(k-3) * h(-1)e(-3)f(-1)|0>"
    " - 40*k^2*(k^2+3*k+5) * h(-1)e(-2)f(-2)|0>"
    " - 10*k^2*(10*k-7) * h(-1)e(-1)e(-1)f(-1)f(-1)|0>"
    " + 10*k^2*(3*k^2+19*k+8) * h(-1)e(-1)f(-3)|0>"
    " - 10*k^3*(k-4)*(k-3) * e(-4)f(-1)|0>"
    " + 20*k^3*(k-4)*(k-3) * e(-3)f(-2)|0>"
    " + 5*k^3*(10*k-7) * e(-2)e(-1)f(-1)f(-1)|0>"
    " - 10*k^3*(2*k^2-4*k+17) * e(-2)f(-3)|0>"
    " - 5*k^3*(10*k-7) * e(-1)e(-1)f(-2)f(-1)|0>"
    " + 10*k^3*(k^2+3*k+5) * e(-1)f(-4)|0>"
)

# -- expected generator products W^i_n W^j in normal form --------------------

OPE_TEXT = {
    (3, 3, 5): "12*k^3*(k-2)*(k-1)*(3*k+4) * |0>",
    (3, 3, 4): "0",
    (3, 3, 3): "36*k^3*(k-2)*(k+2)*(3*k+4) * w[-1]|0>",
    (3, 3, 2): "18*k^3*(k-2)*(k+2)*(3*k+4) * w[-2]|0>",
    (3, 3, 1): (
        "-(162*k^3*(k-2)*(k+2)*(3*k+4)/(16*k+17)) * w[-3]|0>"
        " + (288*k^3*(k-2)*(k+2)^2*(3*k+4)/(16*k+17)) * w[-1]w[-1]|0>"
        " + (36*k*(2*k+3)/(16*k+17)) * W4[-1]|0>"
    ),
    (3, 3, 0): (
        "-(108*k^3*(k-2)*(k+2)*(3*k+4)/(16*k+17)) * w[-4]|0>"
        " + (288*k^3*(k-2)*(k+2)^2*(3*k+4)/(16*k+17)) * w[-2]w[-1]|0>"
        " + (18*k*(2*k+3)/(16*k+17)) * W4[-2]|0>"
    ),
    (3, 4, 6): "0",
    (3, 4, 5): "0",
    (3, 4, 4): "0",
    (3, 4, 3): "48*k^2*(k-3)*(2*k+1)*(2*k+3) * W3[-1]|0>",
    (3, 4, 2): "16*k^2*(k-3)*(2*k+1)*(2*k+3) * W3[-2]|0>",
    (3, 4, 1): (
        "(1248*k^2*(k-3)*(k+2)*(2*k+1)*(2*k+3)/(64*k+107)) * w[-1]W3[-1]|0>"
        " - (48*k^2*(k-3)*(2*k+1)*(2*k+3)*(2*k+7)/(64*k+107)) * W3[-3]|0>"
        " - (12*k*(3*k+4)*(16*k+17)/(64*k+107)) * W5[-1]|0>"
    ),
    (3, 4, 0): (
        "(120*k^2*(k-3)*(k+2)*(2*k+3)*(16*k+17)/(64*k+107)) * w[-2]W3[-1]|0>"
        " + (48*k^2*(k-3)*(k+2)*(2*k+3)*(8*k-11)/(64*k+107)) * w[-1]W3[-2]|0>"
        " - (12*k^2*(k-3)*(2*k+3)*(32*k^2+47*k-52)/(64*k+107)) * W3[-4]|0>"
        " - (24*k*(3*k+4)*(16*k+17)/(5*(64*k+107))) * W5[-2]|0>"
    ),
    (3, 5, 7): "0",
    (3, 5, 6): "0",
    (3, 5, 5): "0",
    (3, 5, 4): "0",
    (3, 5, 3): "-30*k^2*(k-4)*(5*k+8) * W4[-1]|0>",
    (3, 5, 2): "-(15/2)*k^2*(k-4)*(5*k+8) * W4[-2]|0>",
    (3, 5, 1): (
        "-(6480*k^4*(k+2)*(k+3)*(2*k+3)*(3*k+4)*(12*k^2+8*k-17)/(16*k+17)) * w[-5]|0>"
        " - (360*k^4*(k+2)^2*(2*k+3)*(3*k+4)*(32*k^2+797*k+863)/(16*k+17)) * w[-3]w[-1]|0>"
        " + (45*k^4*(k+2)^2*(2*k+3)*(3*k+4)*(1408*k^2+1315*k-977)/(16*k+17)) * w[-2]w[-2]|0>"
        " + (240*k^4*(k+2)^3*(2*k+3)*(3*k+4)*(202*k-169)/(16*k+17)) * w[-1]w[-1]w[-1]|0>"
        " - 15*k*(2*k+3)*(41*k+61) * W3[-1]W3[-1]|0>"
        " + (60*k^2*(k+2)*(404*k^2+1170*k+835)/(16*k+17)) * w[-1]W4[-1]|0>"
        " + (15*k^2*(2176*k^3+9481*k^2+13792*k+6708)/(2*(16*k+17))) * W4[-3]|0>"
    ),
    (3, 5, 0): (
        "-(3240*k^4*(k+2)*(k+3)*(2*k+3)*(3*k+4)*(12*k^2+8*k-17)/(16*k+17)) * w[-6]|0>"
        " - (120*k^4*(k+2)^2*(2*k+3)*(3*k+4)*(184*k^2+1669*k+1801)/(16*k+17)) * w[-4]w[-1]|0>"
        " + (2700*k^4*(k+2)^2*(2*k+3)*(3*k+4)*(8*k^2+5*k+5)/(16*k+17)) * w[-3]w[-2]|0>"
        " + (240*k^4*(k+2)^3*(2*k+3)*(3*k+4)*(202*k-169)/(16*k+17)) * w[-2]w[-1]w[-1]|0>"
        " - 10*k*(2*k+3)*(41*k+61) * W3[-2]W3[-1]|0>"
        " + (60*k^2*(k+2)*(2*k+3)*(64*k+107)/(16*k+17)) * w[-2]W4[-1]|0>"
        " + (60*k^2*(k+2)*(138*k^2+382*k+257)/(16*k+17)) * w[-1]W4[-2]|0>"
        " + (15*k^2*(104*k^3+317*k^2+308*k+108)/(16*k+17)) * W4[-4]|0>"
    ),
    (4, 4, 7): "16*k^4*(k-3)*(k-2)*(k-1)*(2*k+1)*(3*k+4)*(16*k+17) * |0>",
    (4, 4, 6): "0",
    (4, 4, 5): "64*k^4*(k-3)*(k-2)*(k+2)*(2*k+1)*(3*k+4)*(16*k+17) * w[-1]|0>",
    (4, 4, 4): "32*k^4*(k-3)*(k-2)*(k+2)*(2*k+1)*(3*k+4)*(16*k+17) * w[-2]|0>",
    (4, 4, 3): (
        "-96*k^4*(k-3)*(k-2)*(k+2)*(k+5)*(2*k+1)*(3*k+4) * w[-3]|0>"
        " + 672*k^4*(k-3)*(k-2)*(k+2)^2*(2*k+1)*(3*k+4) * w[-1]w[-1]|0>"
        " + 72*k^2*(4*k^3-15*k^2-33*k-4) * W4[-1]|0>"
    ),
    (4, 4, 2): (
        "-64*k^4*(k-3)*(k-2)*(k+2)*(k+5)*(2*k+1)*(3*k+4) * w[-4]|0>"
        " + 672*k^4*(k-3)*(k-2)*(k+2)^2*(2*k+1)*(3*k+4) * w[-2]w[-1]|0>"
        " + 36*k^2*(4*k^3-15*k^2-33*k-4) * W4[-2]|0>"
    ),
    (4, 4, 1): (
        "1920*k^4*(k+2)*(2*k+3)*(3*k+4)*(4*k^3+12*k^2-4*k-9) * w[-5]|0>"
        " + 32*k^4*(k+2)^2*(3*k+4)*(62*k^3+1869*k^2+3337*k+1524) * w[-3]w[-1]|0>"
        " - 40*k^4*(k+2)^2*(3*k+4)*(316*k^3+534*k^2+29*k-165) * w[-2]w[-2]|0>"
        " - 320*k^4*(k+2)^3*(3*k+4)*(5*k+4)*(6*k-5) * w[-1]w[-1]w[-1]|0>"
        " + 8*k*(k+1)*(16*k+17)^2 * W3[-1]W3[-1]|0>"
        " - 48*k^2*(k+2)*(52*k^2+109*k+50) * w[-1]W4[-1]|0>"
        " - 4*k^2*(412*k^3+1503*k^2+1753*k+640) * W4[-3]|0>"
    ),
    (4, 4, 0): (
        "1440*k^4*(k+2)*(2*k+3)*(3*k+4)*(4*k^3+12*k^2-4*k-9) * w[-6]|0>"
        " + 96*k^4*(k+2)^2*(3*k+4)*(11*k+13)*(6*k^2+55*k+41) * w[-4]w[-1]|0>"
        " - 48*k^4*(k+2)^2*(3*k+4)*(136*k^3+180*k^2+161*k+75) * w[-3]w[-2]|0>"
        " - 480*k^4*(k+2)^3*(3*k+4)*(5*k+4)*(6*k-5) * w[-2]w[-1]w[-1]|0>"
        " + 8*k*(k+1)*(16*k+17)^2 * W3[-2]W3[-1]|0>"
        " - 24*k^2*(k+2)*(52*k^2+109*k+50) * w[-2]W4[-1]|0>"
        " - 24*k^2*(k+2)*(52*k^2+109*k+50) * w[-1]W4[-2]|0>"
        " - 12*k^2*(20*k^3+45*k^2+29*k+8) * W4[-4]|0>"
    ),
    (4, 5, 8): "0",
    (4, 5, 7): "0",
    (4, 5, 6): "0",
    (4, 5, 5): "-40*k^3*(k-4)*(k-3)*(2*k+1)*(5*k+8)*(16*k+17) * W3[-1]|0>",
    (4, 5, 4): "-(40/3)*k^3*(k-4)*(k-3)*(2*k+1)*(5*k+8)*(16*k+17) * W3[-2]|0>",
    (4, 5, 3): (
        "-(1320*k^3*(k-4)*(k-3)*(k+2)*(2*k+1)*(5*k+8)*(16*k+17)/(64*k+107)) * w[-1]W3[-1]|0>"
        " + (40*k^3*(k-4)*(k-3)*(2*k+1)*(5*k+8)*(5*k+13)*(16*k+17)/(64*k+107)) * W3[-3]|0>"
        " + (180*k^2*(3*k+4)*(32*k^3-236*k^2-535*k-125)/(64*k+107)) * W5[-1]|0>"
    ),
    (4, 5, 2): (
        "-(160*k^3*(k-4)*(k-3)*(k+2)*(5*k+8)*(13*k+14)*(16*k+17)/(64*k+107)) * w[-2]W3[-1]|0>"
        " - ((80/3)*k^3*(k-4)*(k-3)*(k+2)*(5*k+8)*(14*k-23)*(16*k+17)/(64*k+107)) * w[-1]W3[-2]|0>"
        " + (60*k^3*(k-4)*(k-3)*(5*k+8)*(16*k+17)*(8*k^2+12*k-11)/(64*k+107)) * W3[-4]|0>"
        " + (72*k^2*(3*k+4)*(32*k^3-236*k^2-535*k-125)/(64*k+107)) * W5[-2]|0>"
    ),
    (4, 5, 1): (
        "(20*k^3*(k+2)*(5*k+8)*(2624*k^4-83108*k^3-341706*k^2-433511*k-177319)/(64*k+107)) * w[-3]W3[-1]|0>"
        " + (120*k^3*(k+2)^2*(2*k+1)*(5*k+8)*(16*k-9)*(75*k+74)/(64*k+107)) * w[-1]w[-1]W3[-1]|0>"
        " + ((10/3)*k^3*(k+2)*(5*k+8)*(16*k+17)*(7960*k^3+18296*k^2+6119*k-4457)/(64*k+107)) * w[-2]W3[-2]|0>"
        " - ((40/3)*k^3*(k+2)*(5*k+8)*(28800*k^4+128704*k^3+133404*k^2-43341*k-76171)/(64*k+107)) * w[-1]W3[-3]|0>"
        " + ((20/3)*k^3*(5*k+8)*(45440*k^5+358008*k^4+884944*k^3+619369*k^2-360351*k-404824)/(64*k+107)) * W3[-5]|0>"
        " - 10*k*(5*k+8)*(20*k+19) * W3[-1]W4[-1]|0>"
        " - (40*k^2*(k+2)*(3*k+4)*(1168*k^2+2584*k+1171)/(64*k+107)) * w[-1]W5[-1]|0>"
        " - (120*k^2*(2*k+3)*(3*k+4)*(88*k^2+202*k+97)/(64*k+107)) * W5[-3]|0>"
    ),
    (4, 5, 0): (
        "-(60*k^3*(k+2)*(5*k+8)*(16*k+17)*(236*k^3+2566*k^2+5577*k+3207)/(64*k+107)) * w[-4]W3[-1]|0>"
        " + (2640*k^3*(k+1)*(k+2)^2*(5*k+8)*(10*k-7)*(16*k+17)/(64*k+107)) * w[-2]w[-1]W3[-1]|0>"
        " + (40*k^3*(k+2)*(5*k+8)*(6976*k^4+26048*k^3+28428*k^2+2426*k-6881)/(64*k+107)) * w[-3]W3[-2]|0>"
        " + (40*k^3*(k+2)^2*(5*k+8)*(160*k^3-2938*k^2+215*k+3238)/(64*k+107)) * w[-1]w[-1]W3[-2]|0>"
        " - (20*k^3*(k+2)*(5*k+8)*(16*k+17)*(60*k^3+202*k^2-305*k-407)/(64*k+107)) * w[-2]W3[-3]|0>"
        " - (120*k^3*(k+2)*(5*k+8)*(16*k+17)*(150*k^3+407*k^2+93*k-149)/(64*k+107)) * w[-1]W3[-4]|0>"
        " + (20*k^3*(5*k+8)*(26368*k^5+171408*k^4+368012*k^3+239153*k^2-101871*k-117440)/(64*k+107)) * W3[-6]|0>"
        " - 10*k*(5*k+8)*(20*k+19) * W3[-2]W4[-1]|0>"
        " - (240*k^2*(k+2)*(2*k+3)*(180*k^2+397*k+179)/(64*k+107)) * w[-2]W5[-1]|0>"
        " - (24*k^2*(k+2)*(2064*k^3+7088*k^2+7653*k+2536)/(64*k+107)) * w[-1]W5[-2]|0>"
        " - (12*k^2*(16*k+17)*(36*k^3+107*k^2+107*k+44)/(64*k+107)) * W5[-4]|0>"
    ),
    (5, 5, 9): "40*k^5*(k-4)*(k-3)*(k-2)*(k-1)*(2*k+1)*(5*k+8)*(64*k+107) * |0>",
    (5, 5, 8): "0",
    (5, 5, 7): "200*k^5*(k-4)*(k-3)*(k-2)*(k+2)*(2*k+1)*(5*k+8)*(64*k+107) * w[-1]|0>",
    (5, 5, 6): "100*k^5*(k-4)*(k-3)*(k-2)*(k+2)*(2*k+1)*(5*k+8)*(64*k+107) * w[-2]|0>",
    (5, 5, 5): (
        "-(300*k^5*(k-4)*(k-3)*(k-2)*(k+2)*(2*k+1)*(2*k+7)*(5*k+8)*(64*k+107)/(16*k+17)) * w[-3]|0>"
        " + (2600*k^5*(k-4)*(k-3)*(k-2)*(k+2)^2*(2*k+1)*(5*k+8)*(64*k+107)/(16*k+17)) * w[-1]w[-1]|0>"
        " + (450*k^3*(k-4)*(5*k+8)*(32*k^3-236*k^2-535*k-125)/(16*k+17)) * W4[-1]|0>"
    ),
    (5, 5, 4): (
        "-(200*k^5*(k-4)*(k-3)*(k-2)*(k+2)*(2*k+1)*(2*k+7)*(5*k+8)*(64*k+107)/(16*k+17)) * w[-4]|0>"
        " + (2600*k^5*(k-4)*(k-3)*(k-2)*(k+2)^2*(2*k+1)*(5*k+8)*(64*k+107)/(16*k+17)) * w[-2]w[-1]|0>"
        " + (225*k^3*(k-4)*(5*k+8)*(32*k^3-236*k^2-535*k-125)/(16*k+17)) * W4[-2]|0>"
    ),
    (5, 5, 3): (
        "(400*k^5*(k+2)*(9728*k^7-345370*k^6-2884229*k^5-7339690*k^4-5652707*k^3"
        "+3682145*k^2+6580220*k+1862400)/(16*k+17)) * w[-5]|0>"
        " - (600*k^5*(k+2)^2*(256*k^6+7900*k^5+1054568*k^4+4865734*k^3+8044197*k^2"
        "+5415116*k+1171136)/(16*k+17)) * w[-3]w[-1]|0>"
        " - (25*k^5*(k+2)^2*(137728*k^6-4923496*k^5-24095252*k^4-35522641*k^3-12391265*k^2"
        "+8406500*k+3657600)/(16*k+17)) * w[-2]w[-2]|0>"
        " - (200*k^5*(k+2)^3*(12288*k^5-487882*k^4-1447853*k^3-491400*k^2+1135840*k"
        "+463040)/(16*k+17)) * w[-1]w[-1]w[-1]|0>"
        " + 25*k^2*(544*k^4-16660*k^3-65657*k^2-72453*k-19600) * W3[-1]W3[-1]|0>"
        " - (150*k^3*(k+2)*(1632*k^4-54468*k^3-209305*k^2-225706*k-59200)/(16*k+17)) * w[-1]W4[-1]|0>"
        " - (25*k^3*(6816*k^5-206652*k^4-1172123*k^3-2196873*k^2-1637466*k-371200)/(16*k+17)) * W4[-3]|0>"
    ),
    (5, 5, 2): (
        "(300*k^5*(k+2)*(9728*k^7-345370*k^6-2884229*k^5-7339690*k^4-5652707*k^3"
        "+3682145*k^2+6580220*k+1862400)/(16*k+17)) * w[-6]|0>"
        " + (100*k^5*(k+2)^2*(11264*k^6-476132*k^5-8238118*k^4-32234405*k^3-50927083*k^2"
        "-34091060*k-7406592)/(16*k+17)) * w[-4]w[-1]|0>"
        " - (150*k^5*(k+2)^2*(12800*k^6-428732*k^5-1910710*k^4-3040001*k^3-2661901*k^2"
        "-1600364*k-379776)/(16*k+17)) * w[-3]w[-2]|0>"
        " - (300*k^5*(k+2)^3*(12288*k^5-487882*k^4-1447853*k^3-491400*k^2+1135840*k"
        "+463040)/(16*k+17)) * w[-2]w[-1]w[-1]|0>"
        " + 25*k^2*(544*k^4-16660*k^3-65657*k^2-72453*k-19600) * W3[-2]W3[-1]|0>"
        " - (75*k^3*(k+2)*(1632*k^4-54468*k^3-209305*k^2-225706*k-59200)/(16*k+17)) * w[-2]W4[-1]|0>"
        " - (75*k^3*(k+2)*(1632*k^4-54468*k^3-209305*k^2-225706*k-59200)/(16*k+17)) * w[-1]W4[-2]|0>"
        " - (75*k^3*(384*k^5-10608*k^4-43480*k^3-52785*k^2-21126*k-3200)/(16*k+17)) * W4[-4]|0>"
    ),
    (5, 5, 1): (
        "-(25*k^5*(k+2)*(170027057152*k^10+2356580095488*k^9+13676829114720*k^8"
        "+42735238046312*k^7+74793658083474*k^6+60828640020771*k^5"
        "-18630034236787*k^4-94115224713312*k^3-92379208458276*k^2"
        "-41524883935184*k-7347787324608)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-7]|0>"
        " - (600*k^5*(k+2)^2*(3950979072*k^9+64351956480*k^8+426934964416*k^7+1559551526014*k^6"
        "+3508072702889*k^5+5080429991599*k^4+4758480876095*k^3+2785329492007*k^2"
        "+924445415740*k+132238676112)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-5]w[-1]|0>"
        " + (150*k^5*(k+2)^2*(19297443840*k^9+207821377280*k^8+951110388112*k^7+2382556615296*k^6"
        "+3466010214237*k^5+2750850253947*k^4+729192953742*k^3-542736421532*k^2"
        "-472733750908*k-105657243168)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-4]w[-2]|0>"
        " - (600*k^5*(k+2)^2*(9399296*k^9+115780640*k^8+833628608*k^7+3394583580*k^6"
        "+6845449350*k^5+3538838811*k^4-10856512820*k^3-21519656045*k^2"
        "-14915524340*k-3556147692)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-3]w[-3]|0>"
        " - (100*k^5*(k+2)^3*(49197952*k^7+1316567424*k^6+7996912590*k^5+22351947279*k^4"
        "+34102766376*k^3+29430436515*k^2+13488718172*k"
        "+2525554272)/(17*(k+1)*(16*k+17)^2)) * w[-3]w[-1]w[-1]|0>"
        " + ((25/2)*k^5*(k+2)^3*(1808895488*k^7+12570420576*k^6+34774013520*k^5"
        "+47177699046*k^4+28725570387*k^3+203645169*k^2-8060040140*k"
        "-2646690336)/(17*(k+1)*(16*k+17)^2)) * w[-2]w[-2]w[-1]|0>"
        " + (200*k^5*(k+2)^4*(87914016*k^6+458469088*k^5+817692930*k^4+409776935*k^3"
        "-394611175*k^2-507021564*k-148662512)/(17*(k+1)*(16*k+17)^2)) * w[-1]w[-1]w[-1]w[-1]|0>"
        " - ((25/2)*k^2*(k+2)*(23714656*k^5+162824160*k^4+438179214*k^3+573852691*k^2"
        "+361829501*k+86225720)/(17*(k+1)*(64*k+107))) * w[-1]W3[-1]W3[-1]|0>"
        " + (25*k^2*(2088128*k^6+10843456*k^5+10746960*k^4-34653451*k^3-92307847*k^2"
        "-77110884*k-20771320)/(17*(k+1)*(64*k+107))) * W3[-3]W3[-1]|0>"
        " - (300*k^3*(k+2)*(504864*k^6+454764*k^5-10972571*k^4-41935547*k^3-63119109*k^2"
        "-42865453*k-10561420)/(17*(k+1)*(16*k+17)^2)) * w[-3]W4[-1]|0>"
        " + (150*k^3*(k+2)^2*(9637952*k^5+58430080*k^4+139113500*k^3+162223837*k^2"
        "+92206985*k+20184520)/(17*(k+1)*(16*k+17)^2)) * w[-1]w[-1]W4[-1]|0>"
        " - ((75/8)*k^3*(k+2)*(10958592*k^6+71925552*k^5+180045944*k^4+196657979*k^3"
        "+56586147*k^2-47214608*k-24536960)/(17*(k+1)*(16*k+17)^2)) * w[-2]W4[-2]|0>"
        " + ((25/2)*k^3*(k+2)*(81593088*k^6+609224400*k^5+1877915632*k^4+3065560099*k^3"
        "+2797941765*k^2+1347940946*k+262697360)/(17*(k+1)*(16*k+17)^2)) * w[-1]W4[-3]|0>"
        " - (150*k^3*(18189312*k^8+131109696*k^7+275959096*k^6-155647282*k^5"
        "-1459360618*k^4-2182319517*k^3-1238636927*k^2-142994954*k"
        "+43729880)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * W4[-5]|0>"
        " - (75*k*(21712*k^4+134672*k^3+295445*k^2+266275*k"
        "+78990)/(17*(k+1)*(16*k+17)^2)) * W4[-1]W4[-1]|0>"
        " - ((75/2)*k*(47824*k^4+265368*k^3+534533*k^2+455349*k+133560)/(17*(k+1)*(64*k+107))) * W3[-1]W5[-1]|0>"
    ),
    (5, 5, 0): (
        "-(200*k^5*(k+2)*(5244455936*k^10+70196859904*k^9+398153246900*k^8"
        "+1233587976582*k^7+2201016521153*k^6+2027732203871*k^5"
        "+165492882072*k^4-1736353418536*k^3-1889476600504*k^2"
        "-869314211744*k-154555776032)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-8]|0>"
        " - (400*k^5*(k+2)^2*(724096768*k^9+13032033712*k^8+92438438140*k^7+355708801440*k^6"
        "+835873623678*k^5+1257476731455*k^4+1218124586462*k^3+734755072085*k^2"
        "+250569685256*k+36757401408)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-6]w[-1]|0>"
        " - (400*k^5*(k+2)^2*(214796800*k^9+2717542336*k^8+13231630738*k^7+30829431549*k^6"
        "+28628760321*k^5-20502956550*k^4-80533588567*k^3-85066432663*k^2"
        "-41491861540*k-7925033520)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-5]w[-2]|0>"
        " + (200*k^5*(k+2)^2*(268100608*k^9+2728543168*k^8+12034185208*k^7+30531316020*k^6"
        "+50376301665*k^5+58543428453*k^4+50148887738*k^3+30806117372*k^2"
        "+11758065152*k+1966237968)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-4]w[-3]|0>"
        " + (1200*k^5*(k+2)^3*(57147904*k^8+134150272*k^7-1594361818*k^6-10000010223*k^5"
        "-25615972350*k^4-35776722309*k^3-28439133457*k^2-12042263860*k"
        "-2090245832)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-4]w[-1]w[-1]|0>"
        " + (200*k^5*(k+2)^3*(101861888*k^8-2776465376*k^7-28779796440*k^6-112345101336*k^5"
        "-234716374893*k^4-287794828491*k^3-207844230254*k^2-81832486600*k"
        "-13505087256)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-3]w[-2]w[-1]|0>"
        " + (25*k^5*(k+2)^3*(410452736*k^7+3102590048*k^6+9337355932*k^5"
        "+13766811166*k^4+9179515875*k^3+441625691*k^2-2501518260*k"
        "-881437904)/((16*k+17)*(131*k^2+351*k+229))) * w[-2]w[-2]w[-2]|0>"
        " + (400*k^5*(k+2)^4*(632017152*k^7+4297675600*k^6+11097398636*k^5"
        "+12238161284*k^4+1797240891*k^3-8140638059*k^2-6817742300*k"
        "-1683752944)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-2]w[-1]w[-1]w[-1]|0>"
        " - (25*k^2*(k+2)*(1346512*k^5+9136020*k^4+24342198*k^3+31659247*k^2"
        "+19927547*k+4787240)/(131*k^2+351*k+229)) * w[-2]W3[-1]W3[-1]|0>"
        " - (100*k^2*(k+2)*(227056*k^5+1523040*k^4+3994369*k^3+5084081*k^2"
        "+3107416*k+716920)/(131*k^2+351*k+229)) * w[-1]W3[-2]W3[-1]|0>"
        " + (25*k^2*(218864*k^6+1387084*k^5+3127878*k^4+2581115*k^3-382393*k^2"
        "-1483740*k-448840)/(131*k^2+351*k+229)) * W3[-4]W3[-1]|0>"
        " + (300*k^3*(k+2)*(13304576*k^7+146690032*k^6+668880716*k^5+1643048125*k^4"
        "+2351854427*k^3+1958853655*k^2+874329498*k"
        "+159392280)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-4]W4[-1]|0>"
        " + (300*k^3*(k+2)^2*(44903552*k^6+347191688*k^5+1102896188*k^4"
        "+1838425452*k^3+1691025439*k^2+810350893*k"
        "+156998080)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-2]w[-1]W4[-1]|0>"
        " - (75*k^3*(k+2)*(12201216*k^7+95826768*k^6+305102056*k^5+494975652*k^4"
        "+412040321*k^3+138210893*k^2-14086422*k"
        "-13469960)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-3]W4[-2]|0>"
        " + (300*k^3*(k+2)^2*(12518976*k^6+93551364*k^5+286503394*k^4"
        "+459301951*k^3+405337557*k^2+185853764*k"
        "+34297340)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-1]w[-1]W4[-2]|0>"
        " + (50*k^3*(k+2)*(8988192*k^6+73184988*k^5+245480957*k^4"
        "+433108373*k^3+422458956*k^2+214916428*k"
        "+44202700)/((16*k+17)*(131*k^2+351*k+229))) * w[-2]W4[-3]|0>"
        " + (150*k^3*(k+2)*(2*k+3)*(2310272*k^6+14302664*k^5+35897052*k^4"
        "+47185363*k^3+34385905*k^2+12495594*k"
        "+1193880)/((16*k+17)^2*(131*k^2+351*k+229))) * w[-1]W4[-4]|0>"
        " - (50*k^3*(3095808*k^8+22633488*k^7+54967220*k^6+17421355*k^5"
        "-157516472*k^4-327442197*k^3-312185014*k^2-170931184*k"
        "-48119360)/((16*k+17)^2*(131*k^2+351*k+229))) * W4[-6]|0>"
        " - (75*k*(2*k+3)*(64*k+107)*(368*k^3+1897*k^2+2671*k"
        "+950)/((16*k+17)^2*(131*k^2+351*k+229))) * W4[-2]W4[-1]|0>"
        " - (50*k*(2*k+3)*(5*k+8)*(388*k^2+863*k+405)/(131*k^2+351*k+229)) * W3[-2]W5[-1]|0>"
    ),
}

# -- relations among normal-form words (null fields) --------------------------
# Each text gives the eliminated word as a combination of retained words of
# the same weight; the corresponding null field is (word) - (combination).

REL_W3m2_SQ = (  # weight 8, even sector: W3[-2]W3[-2]|0> = ...
    "-(18*k^3*(k+2)*(3*k+4)*(217088*k^5+1323552*k^4+1864570*k^3-459533*k^2"
    "-1453848*k-18520)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-7]|0>"
    " - (288*k^3*(k+2)^2*(3*k+4)*(6976*k^4+112048*k^3+316803*k^2"
    "+301883*k+91892)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-5]w[-1]|0>"
    " + (54*k^3*(k+2)^2*(3*k+4)*(56320*k^4-6240*k^3-436698*k^2"
    "-541975*k-173763)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-4]w[-2]|0>"
    " + (972*k^3*(k+2)^2*(3*k+4)*(1792*k^4+5096*k^3+6100*k^2"
    "+4783*k+229)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * w[-3]w[-3]|0>"
    " + (72*k^3*(k+2)^3*(3*k+4)*(920*k^2+198*k+187)/(17*(k+1)*(16*k+17)^2)) * w[-3]w[-1]w[-1]|0>"
    " + (9*k^3*(k+2)^3*(3*k+4)*(5792*k^2-1566*k-3425)/(17*(k+1)*(16*k+17)^2)) * w[-2]w[-2]w[-1]|0>"
    " - (1008*k^3*(k+2)^4*(3*k+4)*(6*k-5)/(17*(k+1)*(16*k+17)^2)) * w[-1]w[-1]w[-1]w[-1]|0>"
    " + (9*(k+2)*(26*k+83)/(17*(k+1)*(64*k+107))) * w[-1]W3[-1]W3[-1]|0>"
    " - (6*(380*k^2+822*k+301)/(17*(k+1)*(64*k+107))) * W3[-3]W3[-1]|0>"
    " + (54*k*(k+2)*(120*k^2+141*k-34)/(17*(k+1)*(16*k+17)^2)) * w[-3]W4[-1]|0>"
    " - (36*k*(k+2)^2*(36*k+61)/(17*(k+1)*(16*k+17)^2)) * w[-1]w[-1]W4[-1]|0>"
    " + (27*k*(k+2)*(784*k^2+1565*k+664)/(68*(k+1)*(16*k+17)^2)) * w[-2]W4[-2]|0>"
    " + (9*k*(k+2)*(496*k^2+889*k+214)/(17*(k+1)*(16*k+17)^2)) * w[-1]W4[-3]|0>"
    " + (54*k*(2688*k^4+9208*k^3+9951*k^2+5793*k"
    "+3788)/(17*(k+1)*(16*k+17)^2*(64*k+107))) * W4[-5]|0>"
    " + (18/(17*k*(k+1)*(16*k+17)^2)) * W4[-1]W4[-1]|0>"
    " + (9/(17*k*(k+1)*(64*k+107))) * W3[-1]W5[-1]|0>"
)

REL_W3m1_W4m2 = (  # weight 8, odd sector: W3[-1]W4[-2]|0> = ...
    "(8*k^2*(k+2)*(2*k+3)*(320*k^2-155*k-621)/(64*k+107)) * w[-4]W3[-1]|0>"
    " - (8*k^2*(k+2)^2*(2*k+3)*(136*k-109)/(64*k+107)) * w[-2]w[-1]W3[-1]|0>"
    " + (16*k^2*(k+2)*(2*k+3)*(40*k^2-310*k-327)/(64*k+107)) * w[-3]W3[-2]|0>"
    " + (16*k^2*(k+2)^2*(2*k+3)*(136*k-109)/(3*(64*k+107))) * w[-1]w[-1]W3[-2]|0>"
    " + (8*k^2*(k+2)*(2*k+3)*(168*k^2-16*k+31)/(64*k+107)) * w[-2]W3[-3]|0>"
    " - (20*k^2*(k+2)*(2*k+3)*(64*k^2+167*k-180)/(64*k+107)) * w[-1]W3[-4]|0>"
    " + (24*k^2*(2*k+3)*(32*k^3+344*k^2+347*k-516)/(64*k+107)) * W3[-6]|0>"
    " + (4/3) * W3[-2]W4[-1]|0>"
    " + (4*k*(k+2)*(16*k+17)/(64*k+107)) * w[-2]W5[-1]|0>"
    " - (8*k*(k+2)*(16*k+17)/(5*(64*k+107))) * w[-1]W5[-2]|0>"
    " - (8*k*(7*k+9)*(16*k+17)/(5*(64*k+107))) * W5[-4]|0>"
)

REL_W3m1_W4m3 = (  # weight 9, odd sector: W3[-1]W4[-3]|0> = ...
    "(16*k^2*(k+2)*(1283648*k^5+3440448*k^4-3245504*k^3-18095627*k^2-18583431*k-5789692)"
    "/((64*k+107)*(1424*k^2+3241*k+1542))) * w[-5]W3[-1]|0>"
    " - (8*k^2*(k+2)^2*(455808*k^4+2157980*k^3+3327583*k^2+1752535*k+133700)"
    "/((64*k+107)*(1424*k^2+3241*k+1542))) * w[-3]w[-1]W3[-1]|0>"
    " - (k^2*(k+2)^2*(8192*k^3-432*k^2-30515*k-15420)/(1424*k^2+3241*k+1542)) * w[-2]w[-2]W3[-1]|0>"
    " + (16*k^2*(k+2)^3*(674*k^2+637*k-1100)/(1424*k^2+3241*k+1542)) * w[-1]w[-1]w[-1]W3[-1]|0>"
    " + (8*k^2*(k+2)*(5*k+8)*(16*k+17)*(58944*k^3-96692*k^2-505205*k-340649)"
    "/(3*(64*k+107)*(1424*k^2+3241*k+1542))) * w[-4]W3[-2]|0>"
    " + (4*k^2*(k+2)^2*(5*k+8)*(16*k+17)*(11248*k^2-3953*k-6251)"
    "/(3*(64*k+107)*(1424*k^2+3241*k+1542))) * w[-2]w[-1]W3[-2]|0>"
    " + (8*k^2*(k+2)*(1209472*k^5+1405772*k^4-12112961*k^3-34155325*k^2-32424710*k-10585768)"
    "/((64*k+107)*(1424*k^2+3241*k+1542))) * w[-3]W3[-3]|0>"
    " + (32*k^2*(k+2)^2*(627872*k^4+2346827*k^3+2091732*k^2-1239437*k-1843412)"
    "/(3*(64*k+107)*(1424*k^2+3241*k+1542))) * w[-1]w[-1]W3[-3]|0>"
    " + (3*k^2*(k+2)*(4445184*k^5+20157312*k^4+34479508*k^3+27362195*k^2+8585804*k-569072)"
    "/((64*k+107)*(1424*k^2+3241*k+1542))) * w[-2]W3[-4]|0>"
    " - (8*k^2*(k+2)*(6894208*k^5+54479264*k^4+153131647*k^3+192924011*k^2+105647314*k"
    "+17606072)/(3*(64*k+107)*(1424*k^2+3241*k+1542))) * w[-1]W3[-5]|0>"
    " + (8*k^2*(1120640*k^6+26816288*k^5+152607907*k^4+385419551*k^3+501638434*k^2"
    "+336093968*k+94480832)/((64*k+107)*(1424*k^2+3241*k+1542))) * W3[-7]|0>"
    " - ((16*k+17)*(64*k+107)/(k*(1424*k^2+3241*k+1542))) * W3[-1]W3[-1]W3[-1]|0>"
    " + (4*(k+2)*(358*k+559)/(1424*k^2+3241*k+1542)) * w[-1]W3[-1]W4[-1]|0>"
    " + (8*(449*k^2+1392*k+1075)/(1424*k^2+3241*k+1542)) * W3[-3]W4[-1]|0>"
    " + (112*k*(k+2)*(9*k^2+32*k+31)/(1424*k^2+3241*k+1542)) * w[-3]W5[-1]|0>"
    " + (112*k*(k+2)^2*(3*k+4)/(1424*k^2+3241*k+1542)) * w[-1]w[-1]W5[-1]|0>"
    " - (2*k*(k+2)*(192*k^2+229*k-400)/(5*(1424*k^2+3241*k+1542))) * w[-2]W5[-2]|0>"
    " - (16*k*(k+2)*(16*k+17)*(1686*k^2+3815*k+1786)"
    "/(5*(64*k+107)*(1424*k^2+3241*k+1542))) * w[-1]W5[-3]|0>"
    " - (96*k*(16*k+17)*(2687*k^3+10292*k^2+12927*k+5342)"
    "/(5*(64*k+107)*(1424*k^2+3241*k+1542))) * W5[-5]|0>"
    " - (4/(k*(1424*k^2+3241*k+1542))) * W4[-1]W5[-1]|0>"
)

# -- kernel polynomials of the associative-quotient map (variables w2..w5) ----

Q0_TEXT = (
    "-8*k^4*(k+2)^2*(3*k+4)*(4*k-1)*(64*k+107)*(k^2+k+1)*w2^2"
    " + 4*k^4*(k+2)^3*(3*k+4)*(64*k+107)*(80*k^2+30*k+61)*w2^3"
    " - 112*k^4*(k+2)^4*(3*k+4)*(6*k-5)*(64*k+107)*w2^4"
    " + 2*k*(16*k+17)^2*(k^2+3*k+5)*w3^2"
    " + k*(k+2)*(16*k+17)^2*(26*k+83)*w2*w3^2"
    " + 2*k^2*(k+2)*(64*k+107)*(8*k^2+9*k-8)*w2*w4"
    " - 4*k^2*(k+2)^2*(36*k+61)*(64*k+107)*w2^2*w4"
    " + 2*(64*k+107)*w4^2 + (16*k+17)^2*w3*w5"
)

Q1_TEXT = (
    "-16*k^3*(k+2)*(2*k+1)*(13*k^3+24*k^2+7*k+10)*w2*w3"
    " + 4*k^3*(k+2)^2*(1040*k^3+2232*k^2+1213*k+1116)*w2^2*w3"
    " - 16*k^3*(k+2)^3*(674*k^2+637*k-1100)*w2^3*w3"
    " + (16*k+17)*(64*k+107)*w3^3"
    " + 2*k*(68*k^2+119*k+20)*w3*w4"
    " - 4*k*(k+2)*(358*k+559)*w2*w3*w4"
    " + 4*k^2*(k+2)*(3*k+4)*(4*k-1)*w2*w5"
    " - 112*k^2*(k+2)^2*(3*k+4)*w2^2*w5"
    " + 4*w4*w5"
)

# -- kernel polynomials of the C2-quotient map (variables x2..x5) -------------

B0_SCALE_TEXT = "(17/9)*k*(k+1)*(16*k+17)^2*(64*k+107)"

B0_TEXT = (
    "-112*k^4*(k+2)^4*(3*k+4)*(6*k-5)*(64*k+107)*x2^4"
    " + k*(k+2)*(16*k+17)^2*(26*k+83)*x2*x3^2"
    " - 4*k^2*(k+2)^2*(36*k+61)*(64*k+107)*x2^2*x4"
    " + 2*(64*k+107)*x4^2 + (16*k+17)^2*x3*x5"
)

B1_TEXT = (
    "16*k^3*(k+2)^3*(674*k^2+637*k-1100)*x2^3*x3"
    " - (16*k+17)*(64*k+107)*x3^3"
    " + 4*k*(k+2)*(358*k+559)*x2*x3*x4"
    " + 112*k^2*(k+2)^2*(3*k+4)*x2^2*x5"
    " - 4*x4*x5"
)

B2_TEXT = (
    "16*k^5*(k+2)^5*(6*k-5)*(64*k+107)"
    "*(2734552*k^4+10654776*k^3+10502887*k^2-4070244*k-7670000)*x2^5"
    " - k^2*(k+2)^2*(16*k+17)*(29745920*k^5+282149936*k^4"
    "+715730704*k^3+459700602*k^2-375262083*k-379918040)*x2^2*x3^2"
    " - 20*k^3*(k+2)^3*(64*k+107)"
    "*(81056*k^4-691736*k^3-2503316*k^2-1005811*k+1451208)*x2^3*x4"
    " + 17*(k+1)*(16*k+17)*(64*k+107)^3*x3^2*x4"
    " - 2*k*(k+2)*(64*k+107)*(979064*k^3+3791032*k^2+4574059*k+1616792)*x2*x4^2"
    " - k*(k+2)*(16*k+17)^2*(256632*k^3+825008*k^2+598779*k-114896)*x2*x3*x5"
    " - 34*(k+1)*(16*k+17)^2*(64*k+107)*x5^2"
)

# -- singular vectors at small levels (normal forms) --------------------------

U0_K5_TEXT = (
    "-(56260915200/97) * w[-5]|0> - (47822745600/97) * w[-3]w[-1]|0>"
    " + (43180603200/97) * w[-2]w[-2]|0> + (33230937600/97) * w[-1]w[-1]w[-1]|0>"
    " - (4032/5) * W3[-1]W3[-1]|0> + (550368/97) * w[-1]W4[-1]|0>"
    " + (340704/97) * W4[-3]|0>"
)

U1_K5_TEXT = (
    "-(17721088761600/5917) * w[-3]W3[-1]|0>"
    " + (13262835801600/5917) * w[-1]w[-1]W3[-1]|0>"
    " + (221863017600/61) * w[-2]W3[-2]|0>"
    " - (365470963200/97) * w[-1]W3[-3]|0>"
    " + (21001925203200/5917) * W3[-5]|0>"
    " - (2122848/97) * W3[-1]W4[-1]|0>"
    " - (89631360/61) * w[-1]W5[-1]|0>"
    " - (38413440/61) * W5[-3]|0>"
)

U2_K5_TEXT = (
    "(8181452462686782123600000/9757133) * w[-7]|0>"
    " + (8868381288151420627200000/9757133) * w[-5]w[-1]|0>"
    " - (5147471345450314255200000/9757133) * w[-4]w[-2]|0>"
    " + (23321410696693972800000/9757133) * w[-3]w[-3]|0>"
    " + (47380877265410942400000/159953) * w[-3]w[-1]w[-1]|0>"
    " - (41194303604229799800000/159953) * w[-2]w[-2]w[-1]|0>"
    " - (32478871712964566400000/159953) * w[-1]w[-1]w[-1]w[-1]|0>"
    " + (498585049704000/1037) * w[-1]W3[-1]W3[-1]|0>"
    " - (42034377168000/1037) * W3[-3]W3[-1]|0>"
    " - (8566112126376000/159953) * w[-3]W4[-1]|0>"
    " - (524887446958560000/159953) * w[-1]w[-1]W4[-1]|0>"
    " + (30178345962618000/159953) * w[-2]W4[-2]|0>"
    " - (340143285584592000/159953) * w[-1]W4[-3]|0>"
    " + (357554169263088000/9757133) * W4[-5]|0>"
    " + (89784495360/159953) * W4[-1]W4[-1]|0>"
    " + (13751156160/1037) * W3[-1]W5[-1]|0>"
)

U3_K5_TEXT = (
    "(633349572703577384054400000/45093457) * w[-5]W3[-1]|0>"
    " - (304333657131610010822400000/45093457) * w[-3]w[-1]W3[-1]|0>"
    " + (1141529140148275607400000/464881) * w[-2]w[-2]W3[-1]|0>"
    " + (69658304251736590588800000/45093457) * w[-1]w[-1]w[-1]W3[-1]|0>"
    " + (175753574599043599200000/464881) * w[-4]W3[-2]|0>"
    " - (620956662666585739200000/464881) * w[-2]w[-1]W3[-2]|0>"
    " - (5158511194620039076800000/45093457) * w[-3]W3[-3]|0>"
    " + (820496583733854986582400000/45093457) * w[-1]w[-1]W3[-3]|0>"
    " + (15005173408252695423000000/464881) * w[-2]W3[-4]|0>"
    " - (2704800801881903228784000000/45093457) * w[-1]W3[-5]|0>"
    " + (3141272873181195084427200000/45093457) * W3[-7]|0>"
    " - (63906101745998400/7621) * W3[-1]W3[-1]W3[-1]|0>"
    " + (58024030066093728000/739237) * w[-1]W3[-1]W4[-1]|0>"
    " + (70446353688003384000/739237) * W3[-3]W4[-1]|0>"
    " + (29475630099262095840000/45093457) * w[-3]W5[-1]|0>"
    " + (57072561118296796800000/45093457) * w[-1]w[-1]W5[-1]|0>"
    " - (5862027033141119568000/45093457) * w[-2]W5[-2]|0>"
    " - (82578847924067040000/464881) * w[-1]W5[-3]|0>"
    " - (2748731861102520384000/464881) * W5[-5]|0>"
    " - (434544013612800/739237) * W4[-1]W5[-1]|0>"
)

U0_K6_TEXT = (
    "-(1420529376000/55483) * w[-3]W3[-1]|0>"
    " + (1356106752000/55483) * w[-1]w[-1]W3[-1]|0>"
    " + (19141808000/491) * w[-2]W3[-2]|0>"
    " - (2212337344000/55483) * w[-1]W3[-3]|0>"
    " + (2043429304000/55483) * W3[-5]|0>"
    " - (33950/339) * W3[-1]W4[-1]|0>"
    " - (4632320/491) * w[-1]W5[-1]|0>"
    " - (1995840/491) * W5[-3]|0>"
)

U0_SCALAR = {2: "-3", 3: "-8/13", 4: "15/22"}  # u0 = scalar * W^{k+1}

# -- Zhu-quotient polynomials of the singular vectors, level 5 ----------------

P_K5_TEXT = (
    "82418000*w2^3 - 36225000*w2^2 + (1365*w4+2530000)*w2 - 194*w3^2 - 130*w4",
    "(5116834800*w2^2 - 3289532400*w2 - 49959*w4 + 190779600)*w3"
    " - 3354260*w2*w5 + 479180*w5",
    "-519970178910210000*w2^4 + 301201024956142500*w2^3"
    " + (-8403180446500*w4 - 47718693405180000)*w2^2"
    " + (1231205050775*w3^2 + 1880038332025*w4 + 2220670158630000)*w2"
    " - 180544972860*w3^2 + 33957081*w3*w5 + 1437404*w4^2 - 102193394550*w4",
    "-46312512741411*w3^3"
    " + (8531538341629506000*w2^3 - 737916475955662500*w2^2"
    " + (433503066092460*w4 - 286997147877132000)*w2"
    " - 37952176698930*w4 + 27372745589112000)*w3"
    " + 6990074602966000*w2^2*w5 - 1318615129549900*w2*w5"
    " - 3246519796*w4*w5 + 53681912466000*w5",
)

# -- C2-quotient polynomials of the singular vectors, level 5 -----------------

A_K5_TEXT = (
    "82418000*x2^3 + 1365*x4*x2 - 194*x3^2",
    "730976400*x3*x2^2 - 479180*x5*x2 - 7137*x4*x3",
    "519970178910210000*x2^4 + 8403180446500*x4*x2^2 - 1231205050775*x3^2*x2"
    " - 33957081*x5*x3 - 1437404*x4^2",
    "8531538341629506000*x3*x2^3 + 6990074602966000*x5*x2^2"
    " + 433503066092460*x4*x3*x2 - 46312512741411*x3^3 - 3246519796*x5*x4",
)

# -- Groebner bases of the Zhu-quotient ideals (lex, w5 > w4 > w3 > w2) -------

R1_K5_TEXT = (
    "w2*(5*w2-6)*(5*w2-4)*(7*w2-6)*(7*w2-2)"
    "*(35*w2-23)*(35*w2-17)*(35*w2-3)*(35*w2-2)"
)
R2_K5_TEXT = "w3*(5*w2-6)*(5*w2-4)*(35*w2-23)*(35*w2-17)*(35*w2-3)*(35*w2-2)"
R3_K5_W3SQ_COEFF = 564841728
R4_K5_W4_COEFF = 14685884928
R5_K5_W5_COEFF = 5575284
R_K5_P_DEGREE, R_K5_Q_DEGREE, R_K5_R_DEGREE = 8, 8, 5
R_K5_P_COMMON_TEXT = "w2*(7*w2-6)*(7*w2-2)"
R_K5_Q_COMMON_TEXT = "w2"

R1_K6_TEXT = (
    "w2*(2*w2-3)*(3*w2-4)*(4*w2-3)*(4*w2-1)*(6*w2-5)*(12*w2-7)*(12*w2-1)"
    "*(32*w2-23)*(32*w2-3)*(96*w2-101)*(96*w2-41)*(96*w2-5)"
)
R2_K6_TEXT = (
    "w3*(3*w2-4)*(6*w2-5)*(12*w2-7)*(12*w2-1)"
    "*(32*w2-23)*(96*w2-101)*(96*w2-41)*(96*w2-5)"
)
R3_K6_W3SQ_COEFF = 2399941984319748410712448453175
R4_K6_W4_COEFF = 59998549607993710267811211329375
R5_K6_W5_COEFF = 171818959801082568975
R_K6_P_DEGREE, R_K6_Q_DEGREE, R_K6_R_DEGREE = 12, 12, 7
R_K6_P_COMMON_TEXT = "w2*(2*w2-3)*(4*w2-3)*(4*w2-1)*(32*w2-3)"
R_K6_Q_COMMON_TEXT = "w2"

# -- Groebner basis of the C2-quotient ideal, level 5 (lex, x5 > ... > x2) ----

S_K5_TEXT = (
    "x2^6",
    "x3*x2^4",
    "2780750*x2^5 - 29*x3^2*x2^2",
    "378000*x3*x2^3 - x3^3",
    "82418000*x2^3 + 1365*x4*x2 - 194*x3^2",
    "33674025000*x2^5 + 377*x4*x3^2",
    "804763750000*x2^4 + 61327280*x3^2*x2 - 2379*x4^2",
    "730976400*x3*x2^2 - 479180*x5*x2 - 7137*x4*x3",
    "4633930000*x2^4 - 28315*x3^2*x2 - 13*x5*x3",
    "2018093000*x3*x2^3 + 13*x5*x4",
    "173625253725000*x2^5 - 377*x5^2",
)

# -- top-level eigenvalues (zero modes on the vectors v^{i,j}) ----------------
# polynomials in m = i - 2j and p = (i - j + 1) j, with the level k

EIG_OMEGA_TEXT = "(k*m - m^2 + 2*k*p)/(2*k*(k+2))"
EIG_W3_TEXT = "k^2*m - 3*k*m^2 + 2*m^3 - 6*k*m*p"
EIG_W4_TEXT = (
    "2*k^2*(k^2+k+1)*m - k*(13*k^2+8*k+2)*m^2 + 2*k*(11*k+6)*m^3"
    " - (11*k+6)*m^4 + 4*k^2*(k-3)*(k-2)*p - 4*k^2*(6*k-5)*m*p"
    " + 4*k*(11*k+6)*m^2*p - 2*k^2*(6*k-5)*q"
)
EIG_W5_TEXT = (
    "-2*k^3*(k^2+3*k+5)*m + 5*k^2*(5*k^2+6*k+6)*m^2 - 20*k*(4*k^2+3*k+1)*m^3"
    " + 5*k*(19*k+12)*m^4 - 2*(19*k+12)*m^5 + 10*k^2*(5*k^2-14*k+20)*m*p"
    " - 20*k^2*(10*k-7)*m^2*p + 10*k*(19*k+12)*m^3*p - 10*k^2*(10*k-7)*m*q"
)
# q stands for (i-j+1)(i-j+2)(j-1)j

# -- eigenvalue sets of the energy zero mode ----------------------------------

E_K5 = ("0", "2/35", "3/35", "2/7", "17/35", "23/35", "6/7", "4/5", "6/5")
E_K6 = (
    "0", "5/96", "1/12", "1/4", "3/32", "41/96", "7/12", "3/4",
    "23/32", "101/96", "5/6", "4/3", "3/2",
)

# -- level-6 descendant system on the weight-5/96 module ----------------------
# rows proportional to the vanishing conditions on
# c1 L(-1)u + c2 W3(-1)u + c3 W4(-1)u + c4 W5(-1)u

F_K6_ROWS = (
    ("1", "576", "29952", "-74880"),
    ("113", "65088", "3384576", "400721629860"),
    ("13", "7488", "13498935756", "-973440"),
    (
        "6217083815033",
        "169600079666412680418",
        "186214094427868416",
        "-62241257449122360326409060",
    ),
)
F_K6_HW_1 = ("5/96", "20", "780", "-1560")      # top vector with rising charge
F_K6_HW_5 = ("5/96", "-20", "780", "1560")      # its theta image
