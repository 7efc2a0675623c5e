//! Turns a small .ax1 object list into .ax2 records.

use axoforge::compat::process_ax1;

const AX1: &str = r"% id;xscale;yscale;command
2;1;1;\Gluon(0,50)(60,50){5}{4}
1;1;1;\Line[arrow](0,0)(72.27,0)
3;2;2;\Vertex(10,10){1.5}
";

fn main() {
    match process_ax1(AX1, 0.05) {
        Ok(ax2) => {
            for record in ax2.lines() {
                let mut fields = record.splitn(3, " ; ");
                let (id, bbox) = (fields.next().unwrap(), fields.next().unwrap());
                let ops = fields.next().unwrap().split_whitespace().count();
                println!("object {id}: bbox {bbox}, {ops} payload tokens");
            }
        }
        Err(e) => eprintln!("{e}"),
    }
}
