//! Ribbon-graph model of `Σ_{g,n}` and the twist automorphisms it induces.
//!
//! The surface is a disk with `2g` bands attached in interleaved pairs and
//! `n - 1` bands bounding interior holes. Cutting every band along its
//! co-core leaves a disk `D`; a curve in minimal position is then a family
//! of disjoint chords of `D`, recovered from its cyclic word by ordering the
//! strands inside each band. The image of a based loop under a twist is read
//! off by walking the loop through `D` and splicing in a full turn around the
//! curve at every crossing.
//!
//! Generators: loops `x1..x{2g}`, hole loops `y1..y{n-1}` (the boundary word
//! at `δ1` is `[x1,x2]⋯[x{2g-1},x{2g}] y1⋯y{n-1}`), plus arcs `z2..zn` from
//! the basepoint on `δ1` to a point on `δj`. The arcs make the action of the
//! boundary-fixing mapping class group faithful when `n ≥ 2`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::word::{Alphabet, FreeAutomorphism, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unsupported surface: genus {g}, {n} boundary components")]
    Unsupported { g: usize, n: usize },
    #[error("curve word is trivial")]
    Trivial,
    #[error("curve word must only use loop generators")]
    UsesArc,
    #[error("curve word is a proper power")]
    ProperPower,
    #[error("curve word does not represent a simple closed curve")]
    NotSimple,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum End {
    Out,
    In,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Side {
    band: usize,
    end: End,
}

impl Side {
    fn opposite(self) -> Side {
        Side {
            band: self.band,
            end: match self.end {
                End::Out => End::In,
                End::In => End::Out,
            },
        }
    }
}

/// Side a letter leaves the disk through.
fn departure(l: Letter) -> Side {
    Side {
        band: l.generator(),
        end: if l.is_positive() { End::Out } else { End::In },
    }
}

/// Side a letter re-enters the disk through.
fn arrival(l: Letter) -> Side {
    departure(l).opposite()
}

#[derive(Debug, Clone)]
pub struct SurfaceModel {
    genus: usize,
    boundaries: usize,
    alphabet: Alphabet,
    /// Sides in counterclockwise order around the disk.
    rotation: Vec<Side>,
    /// `position[band][end]` = index in `rotation`.
    position: Vec<[usize; 2]>,
    boundary_word: Word,
}

fn end_index(e: End) -> usize {
    match e {
        End::Out => 0,
        End::In => 1,
    }
}

/// One strand of a curve crossing a band, oriented so that it runs Out → In.
#[derive(Debug, Clone, Copy)]
struct Strand {
    curve: usize,
    /// Occurrence index in the curve's word.
    index: usize,
}

/// A placed chord in the cut-open disk, between two boundary coordinates.
#[derive(Debug, Clone, Copy)]
struct Chord {
    from: u64,
    to: u64,
}

struct Placement {
    total: u64,
    /// Per curve, per occurrence: rank of the strand inside its band.
    rank: Vec<Vec<usize>>,
    count: Vec<usize>,
    stride: u64,
}

impl SurfaceModel {
    pub fn new(genus: usize, boundaries: usize) -> Result<SurfaceModel, ModelError> {
        if boundaries == 0 || (genus == 0 && boundaries < 2) {
            return Err(ModelError::Unsupported {
                g: genus,
                n: boundaries,
            });
        }
        let loops = 2 * genus + boundaries - 1;
        let mut names: Vec<String> = (1..=2 * genus).map(|i| format!("x{i}")).collect();
        names.extend((1..boundaries).map(|j| format!("y{j}")));
        names.extend((2..=boundaries).map(|j| format!("z{j}")));
        let alphabet = Alphabet::new(names).expect("distinct generator names");

        let mut w = Vec::new();
        for h in 0..genus {
            let (a, b) = (2 * h, 2 * h + 1);
            w.extend([
                Letter::new(a, true),
                Letter::new(b, true),
                Letter::new(a, false),
                Letter::new(b, false),
            ]);
        }
        for j in 0..boundaries - 1 {
            w.push(Letter::new(2 * genus + j, true));
        }
        let boundary_word = Word::from_letters(w.iter().copied());

        // next[side] in counterclockwise order
        let mut next: Vec<[Option<Side>; 2]> = vec![[None, None]; loops];
        let k = w.len();
        for i in 0..k {
            let from = departure(w[i]).opposite();
            next[from.band][end_index(from.end)] = Some(departure(w[(i + 1) % k]));
        }
        for j in 0..boundaries - 1 {
            let band = 2 * genus + j;
            next[band][0] = Some(Side { band, end: End::In });
        }
        let start = departure(w[0]);
        let mut rotation = vec![start];
        let mut cur = start;
        loop {
            let nx = next[cur.band][end_index(cur.end)].expect("rotation defined on every side");
            if nx == start {
                break;
            }
            rotation.push(nx);
            cur = nx;
        }
        assert_eq!(
            rotation.len(),
            2 * loops,
            "ribbon graph must have a single vertex"
        );
        let mut position = vec![[0usize; 2]; loops];
        for (i, s) in rotation.iter().enumerate() {
            position[s.band][end_index(s.end)] = i;
        }
        Ok(SurfaceModel {
            genus,
            boundaries,
            alphabet,
            rotation,
            position,
            boundary_word,
        })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundaries(&self) -> usize {
        self.boundaries
    }

    /// Number of loop generators, `2g + n - 1`.
    pub fn loop_rank(&self) -> usize {
        2 * self.genus + self.boundaries - 1
    }

    /// Loop generators plus boundary arcs.
    pub fn rank(&self) -> usize {
        self.loop_rank() + self.boundaries - 1
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Boundary word at `δ1`, read with the basepoint on `δ1`.
    pub fn boundary_word(&self) -> &Word {
        &self.boundary_word
    }

    /// Loop word of the hole `δj`, `j ≥ 2`.
    pub fn hole_word(&self, j: usize) -> Word {
        Word::generator(2 * self.genus + j - 2)
    }

    /// Parses `x1 x2^-1 y1` style words over this model's alphabet.
    pub fn parse(&self, text: &str) -> Result<Word, ModelError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, positive) = match tok.strip_suffix("^-1") {
                Some(n) => (n, false),
                None => (tok, true),
            };
            let g = self
                .alphabet
                .index_of(name)
                .ok_or_else(|| ModelError::UnknownGenerator(name.to_string()))?;
            letters.push(Letter::new(g, positive));
        }
        Ok(Word::from_letters(letters))
    }

    fn side_pos(&self, s: Side) -> usize {
        self.position[s.band][end_index(s.end)]
    }

    /// Counterclockwise offset of side `x` from side `from`.
    fn offset(&self, from: Side, x: Side) -> usize {
        let m = self.rotation.len();
        (self.side_pos(x) + m - self.side_pos(from)) % m
    }

    /// Departure letter `step` positions after the strand, following the
    /// Out → In orientation of the strand.
    fn strand_letter(words: &[Vec<Letter>], s: Strand, step: usize) -> Letter {
        let w = &words[s.curve];
        let k = w.len();
        if w[s.index].is_positive() {
            w[(s.index + 1 + step) % k]
        } else {
            w[(s.index + k - 1 - (step % k)) % k].inverse()
        }
    }

    /// Orders two strands of the same band by their position along it.
    fn compare(&self, words: &[Vec<Letter>], p: Strand, q: Strand, band: usize) -> Ordering {
        let limit = 2 * (words[p.curve].len() + words[q.curve].len()) + 2;
        let mut entry = Side { band, end: End::In };
        for step in 0..limit {
            let lp = Self::strand_letter(words, p, step);
            let lq = Self::strand_letter(words, q, step);
            if lp != lq {
                let op = self.offset(entry, departure(lp));
                let oq = self.offset(entry, departure(lq));
                return op.cmp(&oq);
            }
            entry = arrival(lp);
        }
        Ordering::Equal
    }

    fn place(&self, words: &[Vec<Letter>]) -> Result<Placement, ModelError> {
        let loops = self.loop_rank();
        let mut per_band: Vec<Vec<Strand>> = vec![Vec::new(); loops];
        for (c, w) in words.iter().enumerate() {
            for (i, l) in w.iter().enumerate() {
                per_band[l.generator()].push(Strand { curve: c, index: i });
            }
        }
        let mut rank: Vec<Vec<usize>> = words.iter().map(|w| vec![0; w.len()]).collect();
        for (band, strands) in per_band.iter_mut().enumerate() {
            let mut err = false;
            strands.sort_by(|&p, &q| {
                let o = self.compare(words, p, q, band);
                if o == Ordering::Equal && p.curve == q.curve && p.index != q.index {
                    err = true;
                }
                o.then(p.curve.cmp(&q.curve))
            });
            if err {
                return Err(ModelError::ProperPower);
            }
            for (r, s) in strands.iter().enumerate() {
                rank[s.curve][s.index] = r;
            }
        }
        let count: Vec<usize> = per_band.iter().map(Vec::len).collect();
        let max = count.iter().copied().max().unwrap_or(0) as u64;
        let stride = 2 * max + 4;
        Ok(Placement {
            total: stride * self.rotation.len() as u64,
            rank,
            count,
            stride,
        })
    }

    /// Coordinate of the `rank`-th strand (counting from the Out end) of a
    /// band where it meets side `s`.
    fn strand_coord(&self, pl: &Placement, s: Side, rank: usize) -> u64 {
        let base = self.side_pos(s) as u64 * pl.stride;
        let n = pl.count[s.band];
        let t = match s.end {
            End::Out => rank,
            End::In => n - 1 - rank,
        };
        base + 2 + 2 * t as u64
    }

    /// Coordinate of the loop generator's crossing point on side `s`,
    /// hugging the band edge at the Out-side start.
    fn loop_coord(&self, pl: &Placement, s: Side) -> u64 {
        let base = self.side_pos(s) as u64 * pl.stride;
        match s.end {
            End::Out => base + 1,
            End::In => base + 2 * pl.count[s.band] as u64 + 1,
        }
    }

    /// Boundary piece just before side `s`.
    fn piece_coord(&self, pl: &Placement, s: Side) -> u64 {
        self.side_pos(s) as u64 * pl.stride
    }

    fn basepoint(&self, pl: &Placement) -> u64 {
        self.piece_coord(pl, self.rotation[0])
    }

    /// Point on the boundary component `δj`, `j ≥ 2`.
    fn hole_point(&self, pl: &Placement, j: usize) -> u64 {
        self.piece_coord(
            pl,
            Side {
                band: 2 * self.genus + j - 2,
                end: End::In,
            },
        )
    }

    fn chords(&self, pl: &Placement, words: &[Vec<Letter>], c: usize) -> Vec<Chord> {
        let w = &words[c];
        let k = w.len();
        (0..k)
            .map(|j| {
                let nj = (j + 1) % k;
                Chord {
                    from: self.strand_coord(pl, arrival(w[j]), pl.rank[c][j]),
                    to: self.strand_coord(pl, departure(w[nj]), pl.rank[c][nj]),
                }
            })
            .collect()
    }

    fn validated(&self, w: &Word) -> Result<Vec<Letter>, ModelError> {
        let (_, core) = w.cyclic_core();
        if core.is_empty() {
            return Err(ModelError::Trivial);
        }
        if core
            .letters()
            .iter()
            .any(|l| l.generator() >= self.loop_rank())
        {
            return Err(ModelError::UsesArc);
        }
        Ok(core.letters().to_vec())
    }

    /// Checks that `w` is a primitive word carried by a simple closed curve.
    pub fn check_simple(&self, w: &Word) -> Result<(), ModelError> {
        let letters = self.validated(w)?;
        let words = vec![letters];
        let pl = self.place(&words)?;
        let chords = self.chords(&pl, &words, 0);
        for (i, a) in chords.iter().enumerate() {
            for b in &chords[i + 1..] {
                if interleaved(pl.total, *a, *b) {
                    return Err(ModelError::NotSimple);
                }
            }
        }
        Ok(())
    }

    /// Number of crossings of two simple curves after placing them together.
    /// This equals the geometric intersection number whenever it matches the
    /// absolute algebraic intersection number, and always bounds it above.
    pub fn crossing_count(&self, u: &Word, v: &Word) -> Result<usize, ModelError> {
        let words = vec![self.validated(u)?, self.validated(v)?];
        let pl = self.place(&words)?;
        let a = self.chords(&pl, &words, 0);
        let b = self.chords(&pl, &words, 1);
        Ok(a.iter()
            .map(|x| b.iter().filter(|y| interleaved(pl.total, *x, **y)).count())
            .sum())
    }

    /// Right-handed (`positive = true`) or left-handed twist automorphism
    /// about the simple closed curve carried by `w`.
    pub fn twist(&self, w: &Word, positive: bool) -> Result<FreeAutomorphism, ModelError> {
        self.check_simple(w)?;
        let letters = self.validated(w)?;
        let words = vec![letters.clone()];
        let pl = self.place(&words)?;
        let chords = self.chords(&pl, &words, 0);
        let k = letters.len();
        // full turn starting just after chord j, forward
        let turn = |j: usize, forward: bool| -> Vec<Letter> {
            let fwd: Vec<Letter> = (1..=k).map(|s| letters[(j + s) % k]).collect();
            if forward {
                fwd
            } else {
                fwd.iter().rev().map(|l| l.inverse()).collect()
            }
        };
        let walk = |from: u64, to: u64, out: &mut Vec<Letter>| {
            let path = Chord { from, to };
            let mut hits: Vec<(u64, usize, bool)> = Vec::new();
            for (j, c) in chords.iter().enumerate() {
                if interleaved(pl.total, path, *c) {
                    // the chord's start lies to the right of the path
                    let start_right = in_arc(pl.total, from, to, c.from);
                    let near = if start_right { c.from } else { c.to };
                    let dist = (near + pl.total - from) % pl.total;
                    // a right twist turns right onto the curve
                    let forward = !start_right == positive;
                    hits.push((dist, j, forward));
                }
            }
            hits.sort();
            for (_, j, forward) in hits {
                out.extend(turn(j, forward));
            }
        };
        let base = self.basepoint(&pl);
        let mut images = Vec::with_capacity(self.rank());
        for band in 0..self.loop_rank() {
            let out_side = Side {
                band,
                end: End::Out,
            };
            let in_side = Side { band, end: End::In };
            let mut img = Vec::new();
            walk(base, self.loop_coord(&pl, out_side), &mut img);
            img.push(Letter::new(band, true));
            walk(self.loop_coord(&pl, in_side), base, &mut img);
            images.push(Word::from_letters(img));
        }
        for j in 2..=self.boundaries {
            let mut img = Vec::new();
            walk(base, self.hole_point(&pl, j), &mut img);
            img.push(Letter::new(self.loop_rank() + j - 2, true));
            images.push(Word::from_letters(img));
        }
        Ok(FreeAutomorphism::from_images(images).expect("images use model generators"))
    }
}

/// `x` strictly inside the counterclockwise arc from `a` to `b`.
fn in_arc(total: u64, a: u64, b: u64, x: u64) -> bool {
    let span = (b + total - a) % total;
    let off = (x + total - a) % total;
    off > 0 && off < span
}

fn interleaved(total: u64, p: Chord, q: Chord) -> bool {
    in_arc(total, p.from, p.to, q.from) != in_arc(total, p.from, p.to, q.to)
}
