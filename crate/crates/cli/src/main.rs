fn main() {
    println!("multivoice");
}
