//! The 52 builtin boundary configurations in the template language.
//!
//! Circles carry the self-intersection weight as an expression in the family
//! parameters; `!` marks a (-1)-curve. Side conventions: in a chain item list
//! segments attach left to right, so `L(3;t)` puts its weight-(-3) end next
//! to the following item and `R(3;t)` puts it next to the preceding one.

pub const BUILTIN_TEMPLATES: &str = r#"
version 1

# --- cyclic quotient central point ---

family 1 group I
params t n
require n >= 3
node c -(t+1)*n+1
fan n at c : ! U(t)

family 2 group I
params t n m
require n >= 2
require-strict n >= 3
node c -(t+1)*n
pendant o(-m) at c
fan n at c : ! U(t)

family 3 group I
params t n m A
require n >= 2
require-strict n >= 3
node c -(t+1)*n-1
chain A @c As o(-m)
fan n at c : ! U(t)

family 4 group I
params t n2
require n2 >= 2
node c1 -(t+1)*n2
node c2 -(t+1)*n2
chain @c1 @c2
fan n2 at c1 : ! U(t)
fan n2 at c2 : ! U(t)

family 5 group I
params t n2 A
require n2 >= 1
chain tAs c1:o(-(t+1)*n2-1) tA A c2:o(-(t+1)*n2-1) As
fan n2 at c1 : ! U(t)
fan n2 at c2 : ! U(t)

family 6 group I
params t t2 n2
require n2 >= 1
chain L(2;t2) c1:o(-(t+1)*n2-1) o(-(2*t2+3)) c2:o(-(t+1)*n2-1) R(2;t2)
fan n2 at c1 : ! U(t)
fan n2 at c2 : ! U(t)

family 7 group I
params t t2 n2 A
require n2 >= 1
chain L(mA;t2) tuAs c1:o(-(t+1)*n2-1) tA o(-(2*t2+3)) A c2:o(-(t+1)*n2-1) uAs R(mA;t2)
fan n2 at c1 : ! U(t)
fan n2 at c2 : ! U(t)

family 8 group I
params A
chain tAs ! tA A ! As

family 9 group I
params t
chain L(2;t) ! o(-(2*t+3)) ! R(2;t)

family 10 group I
params t A
chain L(mA;t) tuAs ! tA o(-(2*t+3)) A ! uAs R(mA;t)

# --- non-cyclic quotient central point ---

family 11 group II
chain k:o(-3) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 2 at k : !

family 12 group II
chain k:o(-3) f:o(-2) o(-2) o(-3)
pendant o(-2) at f
fan 2 at k : !

family 13 group II
chain k:o(-4) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 3 at k : !

family 14 group II
chain k:o(-5) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 4 at k : !

family 15 group II
chain k:o(-5) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 2 at k : ! [2]

family 16 group II
chain k:o(-3) o(-2) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 2 at k : !

family 17 group II
chain k:o(-3) k2:o(-3) o(-2) o(-2)
pendant o(-2) at k
pendant o(-2) at k2
fan 2 at k : !

family 18 group II
params m
chain ! o(-2) f:o(-2) o(-2) !
pendant o(-m) at f

family 19 group II
params t m
chain L(3;t) ! o(-2) f:o(-(2*t+4)) o(-2) ! R(3;t)
pendant o(-m) at f

family 20 group II
chain k1:o(-3) f:o(-2) k2:o(-3)
pendant o(-2) at f
fan 2 at k1 : !
fan 2 at k2 : !

family 21 group II
chain [2] ! [3] f:o(-2) [3] ! [2]
pendant o(-2) at f

family 22 group II
params t
chain L(3;t) [2] ! [3] f:o(-(2*t+4)) [3] ! [2] R(3;t)
pendant o(-2) at f

family 23 group II
chain [2] o(-2)!1 f:o(-4) o(-2)!1 [2]
pendant o(-2) at f

family 24 group II
chain ! [2,2] f:o(-2) [2,2] !
pendant o(-2) at f

family 25 group II
params t
chain L(4;t) ! [2,2] f:o(-(2*t+4)) [2,2] ! R(4;t)
pendant o(-2) at f

family 26 group II
node f -2
fan 3 at f : [2] !

family 27 group II
params t
node f -(3*t+5)
fan 3 at f : [2] ! R(3;t)

# --- log canonical, not quotient, central point ---

family 28 group III
node f -3
pendant o(-2) at f
fan 3 at f : [2] !

family 29 group III
params t
node f -(3*t+6)
pendant o(-2) at f
fan 3 at f : [2] ! R(3;t)

family 30 group III
node f -3
fan 4 at f : [2] !

family 31 group III
params t
node f -(4*t+7)
fan 4 at f : [2] ! R(3;t)

family 32 group III
params t
chain L(3;t) ! [2] c1:o(-(t+3)) [2,2] c2:o(-(t+3)) [2] ! R(3;t)
pendant o(-2) at c1
pendant o(-2) at c2

family 33 group III
chain ! [2] c1:o(-2) [3] c2:o(-2) [2] !
pendant o(-2) at c1
pendant o(-2) at c2

family 34 group III
params t
chain L(3;t) ! [2] c1:o(-(t+3)) [3] c2:o(-(t+3)) [2] ! R(3;t)
pendant o(-2) at c1
pendant o(-2) at c2

family 35 group III
params t
chain c1:o(-(2*t+4)) c2:o(-(2*t+4))
fan 2 at c1 : [2] ! R(3;t)
fan 2 at c2 : [2] ! R(3;t)

family 36 group III
chain k:o(-6) f:o(-2) o(-2) o(-2)
pendant o(-2) at f
fan 5 at k : !

family 37 group III
chain k1:o(-4) f:o(-2) k2:o(-4)
pendant o(-2) at f
fan 3 at k1 : !
fan 3 at k2 : !

family 38 group III
chain [2,2] ! [4] f:o(-2) [4] ! [2,2]
pendant o(-2) at f

family 39 group III
params t
chain L(3;t) [2,2] ! [4] f:o(-(2*t+4)) [4] ! [2,2] R(3;t)
pendant o(-2) at f

family 40 group III
chain [2] o(-2)!1 f:o(-4) o(-2)!1 [2]
pendant o(-3) at f

family 41 group III
chain ! [2,2] f:o(-2) [2,2] !
pendant o(-3) at f

family 42 group III
params t
chain L(4;t) ! [2,2] f:o(-(2*t+4)) [2,2] ! R(4;t)
pendant o(-3) at f

family 43 group III
chain [2,2] o(-2)!1 f:o(-6) o(-2)!1 [2,2]
pendant o(-2) at f

family 44 group III
params t
chain L(5;t) ! [2,2,2] f:o(-(2*t+4)) [2,2,2] ! R(5;t)
pendant o(-2) at f

family 45 group III
chain k1:o(-3) f:o(-2) k2:o(-3)
pendant o(-3) at f
fan 2 at k1 : !
fan 2 at k2 : !

family 46 group III
chain [2] ! [3] f:o(-2) [3] ! [2]
pendant o(-3) at f

family 47 group III
params t
chain L(3;t) [2] ! [3] f:o(-(2*t+4)) [3] ! [2] R(3;t)
pendant o(-3) at f

family 48 group III
node f -2
fan 3 at f : o(-3)!2

family 49 group III
node f -2
fan 3 at f : [3] ! [2]

family 50 group III
params t
node f -(3*t+5)
fan 3 at f : [3] ! [2] R(3;t)

family 51 group III
node c -5
fan 3 at c : o(-2)!1 [2]

family 52 group III
params t
node c -(3*t+5)
fan 3 at c : [2,2] ! R(4;t)
"#;
